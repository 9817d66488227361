#include "psnorm/preschwarz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace psnorm {

namespace {

constexpr double kSeriesRCap = 0.9;
constexpr double kPoleSkipRadius = 1e-9;

struct Best {
    double value = -1.0;
    double r = 0.0;
    double theta = 0.0;

    // Deterministic reduction: larger value wins; exact ties prefer the
    // smaller radius, then the smaller angle.
    void offer(double v, double radius, double angle) {
        if (v > value
            || (v == value && (radius < r || (radius == r && angle < theta)))) {
            value = v;
            r = radius;
            theta = angle;
        }
    }
};

bool near_pole(const std::vector<Complex>& poles, Complex z) {
    for (Complex p : poles) {
        if (std::abs(z - p) < kPoleSkipRadius) return true;
    }
    return false;
}

/// Golden-section maximization on [lo, hi]; endpoints are evaluated too and
/// the best point seen is reported into `best` via offer_fn.
template <typename F, typename Offer>
void golden_max(F&& f, double lo, double hi, double tol, Offer&& offer) {
    constexpr double inv_phi = 0.6180339887498949;
    offer(f(lo), lo);
    offer(f(hi), hi);
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    offer(f1, x1);
    offer(f2, x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
            offer(f2, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
            offer(f1, x1);
        }
    }
}

} // namespace

PFunction series_function(PowerSeries f) {
    if (std::abs(f[0]) > 1e-12 || std::abs(f[1] - 1.0) > 1e-12) {
        throw std::invalid_argument("series_function: f must satisfy f(0)=0, f'(0)=1");
    }
    PFunction out;
    out.series = std::move(f);
    out.r_cap = kSeriesRCap;
    const PowerSeries& s = *out.series;
    out.fn = [s](Complex z) { return eval(s, z); };
    return out;
}

PFunction closed_form_function(std::function<Complex(Complex)> fn,
                               std::vector<Complex> poles) {
    PFunction out;
    out.fn = std::move(fn);
    out.poles = std::move(poles);
    return out;
}

PFunction witness_function(const PhiFamily& fam, ClassKind kind) {
    return closed_form_function(
        [fam, kind](Complex z) { return witness_preschwarzian(fam, kind, z); },
        witness_poles(fam, kind));
}

PFunction preschwarzian(const PFunction& f) {
    if (!f.series_backed()) {
        throw std::invalid_argument("preschwarzian: requires a series-backed function");
    }
    const PowerSeries fp = derivative(*f.series);
    const PowerSeries fpp = derivative(fp);
    PFunction out;
    out.series = div(fpp, fp); // f'(0) = 1, so the division is valid
    out.r_cap = kSeriesRCap;
    const PowerSeries& s = *out.series;
    out.fn = [s](Complex z) { return eval(s, z); };
    return out;
}

void to_json(nlohmann::json& j, const NormEstimate& e) {
    j = nlohmann::json{{"value", e.value},
                       {"argmax_re", e.argmax.real()},
                       {"argmax_im", e.argmax.imag()},
                       {"radial_only", e.radial_only},
                       {"tolerance", e.tolerance}};
}

NormEstimate hyperbolic_norm(const PFunction& P, const SearchConfig& cfg) {
    if (cfg.radii < 64 || cfg.angles < 128 || !(cfg.r_max < 1.0) || cfg.r_max <= 0.0) {
        throw std::invalid_argument("hyperbolic_norm: need radii >= 64, angles >= 128, 0 < r_max < 1");
    }
    const double r_hi = std::min(cfg.r_max, P.r_cap);
    NormEstimate est;
    est.radii = cfg.radii;
    est.angles = cfg.angles;
    est.tolerance = cfg.refinement_tol;

    const auto g = [&](double r, double theta) -> double {
        const Complex z = std::polar(r, theta);
        if (near_pole(P.poles, z)) {
            est.pole_skipped = true;
            return -1.0;
        }
        return (1.0 - r * r) * std::abs(P.fn(z));
    };

    const double dtheta = 2.0 * std::numbers::pi / cfg.angles;
    const double dr = r_hi / cfg.radii;

    Best best;
    struct AngleBest {
        double value;
        int radius_index;
        int angle_index;
    };
    std::vector<AngleBest> per_angle(static_cast<std::size_t>(cfg.angles));
    for (int j = 0; j < cfg.angles; ++j) {
        const double theta = j * dtheta;
        AngleBest ab{-1.0, 0, j};
        for (int i = 0; i <= cfg.radii; ++i) {
            const double v = g(i * dr, theta);
            if (v > ab.value) {
                ab.value = v;
                ab.radius_index = i;
            }
            best.offer(v, i * dr, theta);
        }
        per_angle[static_cast<std::size_t>(j)] = ab;
    }

    std::vector<AngleBest> top = per_angle;
    std::stable_sort(top.begin(), top.end(),
                     [](const AngleBest& a, const AngleBest& b) { return a.value > b.value; });
    const int k = std::min<int>(cfg.top_angles, cfg.angles);

    for (int sel = 0; sel < k; ++sel) {
        const AngleBest& ab = top[static_cast<std::size_t>(sel)];
        double theta = ab.angle_index * dtheta;
        double r = ab.radius_index * dr;
        double r_lo = std::max(0.0, r - dr), r_up = std::min(r_hi, r + dr);
        double t_lo = theta - dtheta, t_up = theta + dtheta;
        for (int round = 0; round < 3; ++round) {
            double best_r = r;
            double best_rv = -1.0;
            golden_max([&](double rr) { return g(rr, theta); }, r_lo, r_up,
                       cfg.refinement_tol,
                       [&](double v, double rr) {
                           best.offer(v, rr, theta);
                           if (v > best_rv) { best_rv = v; best_r = rr; }
                       });
            r = best_r;
            double best_t = theta;
            double best_tv = -1.0;
            golden_max([&](double tt) { return g(r, tt); }, t_lo, t_up,
                       cfg.refinement_tol,
                       [&](double v, double tt) {
                           best.offer(v, r, tt);
                           if (v > best_tv) { best_tv = v; best_t = tt; }
                       });
            theta = best_t;
            const double r_half = (r_up - r_lo) * 0.25;
            r_lo = std::max(0.0, r - r_half);
            r_up = std::min(r_hi, r + r_half);
            const double t_half = (t_up - t_lo) * 0.25;
            t_lo = theta - t_half;
            t_up = theta + t_half;
        }
    }

    est.value = best.value;
    est.argmax = std::polar(best.r, best.theta);
    return est;
}

NormEstimate radial_norm(const PFunction& P, double r_max) {
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw std::invalid_argument("radial_norm: need 0 < r_max < 1");
    }
    const double r_hi = std::min(r_max, P.r_cap);
    constexpr int kNodes = 4096;
    NormEstimate est;
    est.radial_only = true;
    est.radii = kNodes;
    est.angles = 1;
    est.tolerance = 1e-10;

    const auto g = [&](double r) -> double {
        const Complex z(r, 0.0);
        if (near_pole(P.poles, z)) {
            est.pole_skipped = true;
            return -1.0;
        }
        return (1.0 - r * r) * std::abs(P.fn(z));
    };

    const double dr = r_hi / (kNodes - 1);
    Best best;
    int best_i = 0;
    for (int i = 0; i < kNodes; ++i) {
        const double v = g(i * dr);
        if (v > best.value) best_i = i;
        best.offer(v, i * dr, 0.0);
    }
    const double lo = std::max(0.0, (best_i - 1) * dr);
    const double hi = std::min(r_hi, (best_i + 1) * dr);
    golden_max(g, lo, hi, est.tolerance,
               [&](double v, double r) { best.offer(v, r, 0.0); });

    est.value = best.value;
    est.argmax = Complex(best.r, 0.0);
    return est;
}

double becker_margin(const PFunction& f, const SearchConfig& cfg) {
    const PFunction P = f.series_backed() ? preschwarzian(f) : f;
    PFunction zP;
    zP.poles = P.poles;
    zP.r_cap = P.r_cap;
    zP.fn = [&P](Complex z) { return z * P.fn(z); };
    return hyperbolic_norm(zP, cfg).value;
}

} // namespace psnorm
