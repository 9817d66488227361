#include "psnorm/bounds.hpp"

#include <cmath>
#include <limits>

namespace psnorm {

namespace {

void require_domain(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

double g4(double s, double t) {
    return (1.0 + t) * (1.0 - s + 2.0 * s * t) / (1.0 + s * t)
         + (1.0 - t * t) * (1.0 - s + s * t);
}

} // namespace

double limacon_quartic(double s, double t) {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return -3.0 * s3 * t * t * t * t
         + (2.0 * s3 - 8.0 * s2) * t * t * t
         + (s3 + 6.0 * s2 - 7.0 * s) * t * t
         + (2.0 * s2 + 6.0 * s - 2.0) * t
         + s2 + s + 1.0;
}

double quartic_root_ts(double s) {
    require_domain(s >= -1.0 / 3.0 && s <= 1.0 / 3.0, "quartic_root_ts: -1/3 <= s <= 1/3");
    double lo = 0.0, hi = 1.0;
    double flo = limacon_quartic(s, lo); // = 1 + s + s^2 > 0
    const double fhi = limacon_quartic(s, hi); // = s^2 - 1 < 0
    if (!(flo > 0.0 && fhi < 0.0)) {
        throw NoSignChange("quartic_root_ts: no sign change on (0,1)");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double fm = limacon_quartic(s, mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double quadratic_root_rs(double s) {
    if (!(s > 0.0)) {
        throw OutOfBranch("quadratic_root_rs: defined only for s > 0 (bound is 1-s otherwise)");
    }
    require_domain(s <= 1.0 / 3.0, "quadratic_root_rs: s <= 1/3");
    return (-(1.0 - s) + std::sqrt((1.0 - s) * (1.0 - s) + 3.0 * s * s)) / (3.0 * s);
}

BoundResult theorem_bound(const PhiFamily& fam, ClassKind kind) {
    BoundResult out;
    out.family = fam.variant();
    out.param = fam.param();
    out.kind = kind;
    const double p = fam.param();
    switch (fam.variant()) {
        case Family::Conchoid:
            out.value = (kind == ClassKind::Starlike) ? 2.0 * (p + 6.0) / (3.0 + p)
                                                      : 6.0 / (3.0 + p);
            break;
        case Family::Limacon:
            if (kind == ClassKind::Starlike) {
                const double ts = quartic_root_ts(p);
                out.interior_root = ts;
                out.value = g4(p, ts);
            } else if (p > 0.0) {
                const double rs = quadratic_root_rs(p);
                out.interior_root = rs;
                out.value = (1.0 - rs * rs) * (1.0 - p + p * rs);
            } else {
                out.value = 1.0 - p;
            }
            break;
        case Family::Cissoid:
            if (kind == ClassKind::Starlike) {
                out.sharp = false;
                if (p == 0.5) {
                    // The closed form degenerates at alpha = 1/2 (zero denominator).
                    out.unbounded = true;
                    out.value = std::numeric_limits<double>::infinity();
                } else {
                    out.value = 2.0 * (2.0 - p) / ((1.0 + p) * (1.0 - 2.0 * p));
                }
            } else {
                out.value = 2.0 / (1.0 + p);
            }
            break;
    }
    return out;
}

void to_json(nlohmann::json& j, const BoundResult& b) {
    j = nlohmann::json{{"family", family_name(b.family)},
                       {"params", b.param},
                       {"kind", kind_name(b.kind)},
                       {"value", b.unbounded ? nlohmann::json("inf") : nlohmann::json(b.value)},
                       {"sharp", b.sharp},
                       {"unbounded", b.unbounded}};
    if (b.interior_root) {
        j["interior_root"] = *b.interior_root;
    } else {
        j["interior_root"] = nullptr;
    }
}

double probe_eval(const ProbeFunction& p, double x) {
    const double a = p.param;
    const double s = p.param;
    switch (p.id) {
        case ProbeId::G2:
            require_domain(x > 0.0 && x < 1.0, "G2: t in (0,1)");
            return (x + 1.0) * (6.0 - 2.0 * a + 3.0 * a * x) / (3.0 + a * x);
        case ProbeId::G4:
            require_domain(x > 0.0 && x < 1.0, "G4: t in (0,1)");
            return g4(s, x);
        case ProbeId::G6: {
            require_domain(x > 0.0 && x < 1.0, "G6: t in (0,1)");
            const double den = 1.0 - a * x - a * x * x;
            return (1.0 + x) * (1.0 + a * x * x) / (den * (1.0 + a * x))
                 + (1.0 + x) / (1.0 + a * x);
        }
        case ProbeId::G7:
            require_domain(x >= 0.0 && x < 1.0, "G7: r in [0,1)");
            return (1.0 + x) * (3.0 - a + a * x) / (3.0 + a * x);
        case ProbeId::G8:
            require_domain(x >= 0.0 && x < 1.0, "G8: r in [0,1)");
            return (1.0 - x * x) * (1.0 - s + s * x);
        case ProbeId::G9:
            require_domain(x >= 0.0 && x < 1.0, "G9: r in [0,1)");
            return (1.0 + x) / (1.0 + a * x);
        case ProbeId::H1:
        case ProbeId::H2: {
            const double alpha = x;
            const double radicand = 9.0 * alpha * alpha + 3.0 * alpha * alpha * alpha
                                  - 2.0 * alpha * alpha * alpha * alpha;
            if (radicand < 0.0) {
                throw NegativeRadicand("H1/H2: 9a^2+3a^3-2a^4 < 0 (alpha outside [-3/2, 1])");
            }
            const double core = 108.0 * alpha * alpha + 9.0 * alpha * alpha * alpha
                              - 15.0 * alpha * alpha * alpha * alpha;
            const double wing = 18.0 * std::sqrt(3.0) * alpha * std::sqrt(radicand);
            return p.id == ProbeId::H1 ? core + wing : core - wing;
        }
        case ProbeId::Hs: {
            require_domain(x > 0.0 && x < 1.0, "Hs: t in (0,1)");
            const double den = 1.0 + s * x;
            return limacon_quartic(s, x) / (den * den);
        }
        default:
            throw DomainError("probe_eval: G1/G3/G5 take two arguments (r, t)");
    }
}

double probe_eval(const ProbeFunction& p, double r, double t) {
    require_domain(t > 0.0 && t <= r && r < 1.0, "two-argument probe: 0 < t <= r < 1");
    const double a = p.param;
    const double s = p.param;
    const double tail = (1.0 - r * r) / r;
    switch (p.id) {
        case ProbeId::G1: {
            const double den = 3.0 + (a - 3.0) * t - a * t * t;
            return (3.0 - a + 2.0 * a * t) * (1.0 - t * t) / den
                 + tail * (3.0 / den - 1.0);
        }
        case ProbeId::G3:
            return (1.0 + t) * (1.0 - s + 2.0 * s * t) / (1.0 + s * t)
                 + tail * ((1.0 - s) * t + s * t * t);
        case ProbeId::G5: {
            const double den = 1.0 - a * t - a * t * t;
            return (1.0 + t) * (1.0 + a * t * t) / (den * (1.0 + a * t))
                 + tail * t / ((1.0 - t) * (1.0 + a * t));
        }
        default:
            throw DomainError("probe_eval: this probe takes one argument");
    }
}

} // namespace psnorm
