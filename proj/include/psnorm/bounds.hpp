#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "psnorm/maminda.hpp"

namespace psnorm {

/// Closed-form norm bound for one (family, kind) pair.
///
/// interior_root is the maximizer radius when the sup sits strictly inside
/// (0,1): t_s for (Limacon, Starlike), r_s for (Limacon, Convex) with s > 0.
/// unbounded flags the degenerate (Cissoid, Starlike, alpha = 1/2) case,
/// where value is +infinity.
struct BoundResult {
    double value = 0.0;
    bool sharp = true;
    std::optional<double> interior_root;
    bool unbounded = false;
    Family family = Family::Conchoid;
    double param = 0.0;
    ClassKind kind = ClassKind::Starlike;
};

void to_json(nlohmann::json& j, const BoundResult& b);

BoundResult theorem_bound(const PhiFamily& fam, ClassKind kind);

/// Unique t in (0,1) with
/// -3s^3 t^4 + (2s^3-8s^2) t^3 + (s^3+6s^2-7s) t^2 + (2s^2+6s-2) t + s^2+s+1 = 0,
/// by bisection to 1e-12. Requires -1/3 <= s <= 1/3.
double quartic_root_ts(double s);

/// Unique positive root of 3s r^2 + 2(1-s) r - s = 0 in (0,1), by the
/// explicit quadratic formula (+ branch). Requires 0 < s <= 1/3,
/// throws OutOfBranch otherwise.
double quadratic_root_rs(double s);

/// The auxiliary functions whose monotonicity/sign behavior the probe suite
/// verifies numerically. G1/G3/G5 take two arguments (r, t); the rest one.
enum class ProbeId { G1, G2, G3, G4, G5, G6, G7, G8, G9, H1, H2, Hs };

struct ProbeFunction {
    ProbeId id;
    double param = 0.0; // alpha or s where the probe needs one; unused for H1/H2
};

/// Single-argument probes: G2/G4 at t in (0,1); G6 at t; G7/G8/G9 at r in [0,1);
/// H1/H2 at alpha in [-3/2, 1]; Hs at t in (0,1).
double probe_eval(const ProbeFunction& p, double x);

/// Two-argument probes G1, G3, G5 at (r, t) with 0 < t <= r < 1.
double probe_eval(const ProbeFunction& p, double r, double t);

/// Numerator of Hs (the quartic in t from the limacon starlike root equation).
double limacon_quartic(double s, double t);

} // namespace psnorm
