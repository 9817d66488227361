#include "psnorm/maminda.hpp"

#include <cmath>
#include <numbers>

namespace psnorm {

namespace {

constexpr double kPoleTol = 1e-13;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Conchoid: return "conchoid";
        case Family::Limacon: return "limacon";
        case Family::Cissoid: return "cissoid";
    }
    return "?";
}

std::string kind_name(ClassKind k) {
    return k == ClassKind::Starlike ? "starlike" : "convex";
}

PhiFamily PhiFamily::conchoid(double alpha) {
    require(alpha > -3.0 && alpha <= 1.0, "conchoid: alpha must satisfy -3 < alpha <= 1");
    return PhiFamily(Family::Conchoid, alpha);
}

PhiFamily PhiFamily::limacon(double s) {
    require(s >= -1.0 / 3.0 && s <= 1.0 / 3.0, "limacon: s must satisfy -1/3 <= s <= 1/3");
    return PhiFamily(Family::Limacon, s);
}

PhiFamily PhiFamily::cissoid(double alpha) {
    require(alpha >= 0.0 && alpha <= 0.5, "cissoid: alpha must satisfy 0 <= alpha <= 1/2");
    return PhiFamily(Family::Cissoid, alpha);
}

Complex phi_eval(const PhiFamily& fam, Complex z) {
    const double p = fam.param();
    switch (fam.variant()) {
        case Family::Conchoid: {
            const Complex den = 3.0 + (p - 3.0) * z - p * z * z;
            if (std::abs(den) < kPoleTol) {
                throw PoleAtPoint("conchoid phi: denominator zero");
            }
            return 3.0 / den;
        }
        case Family::Limacon:
            return (1.0 + z) * (1.0 - p * z);
        case Family::Cissoid: {
            const Complex den = (1.0 - z) * (1.0 + p * z);
            if (std::abs(den) < kPoleTol) {
                throw PoleAtPoint("cissoid phi: denominator zero");
            }
            return 1.0 + z / den;
        }
    }
    throw std::logic_error("unreachable");
}

PowerSeries phi_taylor(const PhiFamily& fam, int order) {
    require(order >= 2, "phi_taylor: order must be >= 2");
    const double p = fam.param();
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1.0;
    switch (fam.variant()) {
        case Family::Conchoid: {
            // c_n = 3/(alpha+3) * (1 + (-1)^n (alpha/3)^(n+1))
            const double scale = 3.0 / (p + 3.0);
            double pow = p / 3.0; // (alpha/3)^(n+1) with alternating sign folded in
            for (int n = 1; n <= order; ++n) {
                pow *= -p / 3.0;
                c[static_cast<std::size_t>(n)] = scale * (1.0 + pow);
            }
            break;
        }
        case Family::Limacon:
            c[1] = 1.0 - p;
            c[2] = -p;
            break;
        case Family::Cissoid: {
            // c_n = (1 - (-1)^n alpha^n)/(1+alpha)
            double pow = 1.0; // (-alpha)^n
            for (int n = 1; n <= order; ++n) {
                pow *= -p;
                c[static_cast<std::size_t>(n)] = (1.0 - pow) / (1.0 + p);
            }
            break;
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries extremal_function(const PhiFamily& fam, ClassKind kind, int order) {
    require(order >= 4, "extremal_function: order must be >= 4");
    PowerSeries phi = phi_taylor(fam, order);
    std::vector<Complex> a(phi.coeffs().begin(), phi.coeffs().end());
    a[0] = 0.0;
    // E = exp(int_0^z (phi(t)-1)/t dt) = f_starlike / z
    const PowerSeries e = exp_series(integrate_over_z(PowerSeries(std::move(a))));
    std::vector<Complex> f(static_cast<std::size_t>(order) + 1);
    if (kind == ClassKind::Starlike) {
        for (int n = 1; n <= order; ++n) {
            f[static_cast<std::size_t>(n)] = e[n - 1];
        }
    } else {
        for (int n = 1; n <= order; ++n) {
            f[static_cast<std::size_t>(n)] = e[n - 1] / static_cast<double>(n);
        }
    }
    return PowerSeries(std::move(f));
}

Complex witness_preschwarzian(const PhiFamily& fam, ClassKind kind, Complex z) {
    const double p = fam.param();
    const auto guard = [](Complex den) {
        if (std::abs(den) < kPoleTol) {
            throw PoleAtPoint("witness pre-Schwarzian: pole");
        }
        return den;
    };
    switch (fam.variant()) {
        case Family::Conchoid:
            if (kind == ClassKind::Starlike) {
                return (6.0 - 2.0 * p + 3.0 * p * z) / guard((1.0 - z) * (3.0 + p * z));
            }
            return (3.0 - p + p * z) / guard((1.0 - z) * (3.0 + p * z));
        case Family::Limacon:
            if (kind == ClassKind::Starlike) {
                return -(1.0 - p + 2.0 * p * z) / guard((1.0 - z) * (1.0 + p * z))
                       - (1.0 - p + p * z);
            }
            return -(1.0 - p + p * z);
        case Family::Cissoid:
            if (kind == ClassKind::Starlike) {
                throw NoWitness("no sharpness witness for the cissoid starlike bound");
            }
            return 1.0 / guard((1.0 - z) * (1.0 + p * z));
    }
    throw std::logic_error("unreachable");
}

std::vector<Complex> witness_poles(const PhiFamily& fam, ClassKind kind) {
    const double p = fam.param();
    switch (fam.variant()) {
        case Family::Conchoid: {
            std::vector<Complex> poles{Complex(1.0, 0.0)};
            if (p != 0.0) poles.emplace_back(-3.0 / p, 0.0);
            return poles;
        }
        case Family::Limacon: {
            if (kind == ClassKind::Convex) return {};
            std::vector<Complex> poles{Complex(1.0, 0.0)};
            if (p != 0.0) poles.emplace_back(-1.0 / p, 0.0);
            return poles;
        }
        case Family::Cissoid: {
            if (kind == ClassKind::Starlike) {
                throw NoWitness("no sharpness witness for the cissoid starlike bound");
            }
            std::vector<Complex> poles{Complex(1.0, 0.0)};
            if (p != 0.0) poles.emplace_back(-1.0 / p, 0.0);
            return poles;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<BoundaryPoint> boundary_curve(const PhiFamily& fam, int num_points) {
    require(num_points >= 16, "boundary_curve: num_points must be >= 16");
    const bool offset = fam.variant() != Family::Limacon; // pole at theta = 0 otherwise
    const double step = 2.0 * std::numbers::pi / num_points;
    std::vector<BoundaryPoint> pts;
    pts.reserve(static_cast<std::size_t>(num_points));
    for (int k = 0; k < num_points; ++k) {
        const double theta = (k + (offset ? 0.5 : 0.0)) * step;
        pts.push_back({theta, phi_eval(fam, std::polar(1.0, theta))});
    }
    return pts;
}

int winding_number(const std::vector<Complex>& polygon, Complex w) {
    // Sunday's crossing algorithm.
    const auto is_left = [](Complex a, Complex b, Complex c) {
        return (b.real() - a.real()) * (c.imag() - a.imag())
             - (c.real() - a.real()) * (b.imag() - a.imag());
    };
    int wn = 0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = polygon[i];
        const Complex b = polygon[(i + 1) % n];
        if (a.imag() <= w.imag()) {
            if (b.imag() > w.imag() && is_left(a, b, w) > 0.0) ++wn;
        } else {
            if (b.imag() <= w.imag() && is_left(a, b, w) < 0.0) --wn;
        }
    }
    return wn;
}

bool region_membership(const PhiFamily& fam, Complex w) {
    if (fam.variant() == Family::Limacon) {
        return limacon_region_residual(fam.param(), w) < 0.0;
    }
    const std::vector<BoundaryPoint> curve = boundary_curve(fam, 4096);
    std::vector<Complex> poly;
    poly.reserve(curve.size() + 2);
    for (const BoundaryPoint& p : curve) poly.push_back(p.w);
    // The curve escapes to +-i*infinity at the z = 1 pole and the image
    // region is the unbounded component to its right. Close the sampled
    // polygon around the far right so that component is the one enclosed.
    constexpr double kFarRight = 1e9;
    poly.emplace_back(kFarRight, poly.back().imag());
    poly.emplace_back(kFarRight, poly.front().imag());
    return winding_number(poly, w) != 0;
}

RegionConstants conchoid_region_constants(double alpha) {
    require(alpha > -3.0 && alpha <= 1.0, "conchoid constants: -3 < alpha <= 1");
    const double q = (3.0 + alpha) * (3.0 + alpha);
    return {9.0 * (1.0 + alpha) / (2.0 * q), 54.0 / (q * (3.0 - alpha))};
}

double conchoid_curve_residual(double alpha, Complex w) {
    const RegionConstants rc = conchoid_region_constants(alpha);
    const double u = w.real();
    const double v = w.imag();
    return (u - rc.a) * (u * u + v * v) - rc.k * (u - 0.5) * (u - 0.5);
}

double limacon_region_residual(double s, Complex w) {
    const double u = w.real();
    const double v = w.imag();
    const double lhs = (u - 1.0) * (u - 1.0) + v * v - s * s;
    const double rhs = (1.0 - s) * (1.0 - s) * ((u - 1.0 - s) * (u - 1.0 - s) + v * v);
    return lhs * lhs - rhs;
}

double cissoid_curve_residual(double alpha, Complex w) {
    const double u = w.real();
    const double v = w.imag();
    const double shift = (2.0 * alpha - 1.0) / (2.0 * (alpha - 1.0));
    const double coeff = 2.0 * alpha / ((1.0 + alpha) * (1.0 + alpha) * (alpha - 1.0));
    return (u - shift) * ((u - 1.0) * (u - 1.0) + v * v) + coeff * v * v;
}

} // namespace psnorm
