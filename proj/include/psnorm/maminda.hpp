#pragma once

#include <string>
#include <vector>

#include "psnorm/series.hpp"

namespace psnorm {

enum class Family { Conchoid, Limacon, Cissoid };
enum class ClassKind { Starlike, Convex };

std::string family_name(Family f);
std::string kind_name(ClassKind k);

/// One of the three parameterized Ma-Minda functions:
///   Conchoid(alpha): 3/(3+(alpha-3)z-alpha z^2),  -3 < alpha <= 1
///   Limacon(s):      (1+z)(1-sz),                 -1/3 <= s <= 1/3
///   Cissoid(alpha):  1 + z/((1-z)(1+alpha z)),    0 <= alpha <= 1/2
/// Construction validates the parameter range.
class PhiFamily {
public:
    static PhiFamily conchoid(double alpha);
    static PhiFamily limacon(double s);
    static PhiFamily cissoid(double alpha);

    Family variant() const { return variant_; }
    double param() const { return param_; }
    std::string name() const { return family_name(variant_); }

private:
    PhiFamily(Family variant, double param) : variant_(variant), param_(param) {}
    Family variant_;
    double param_;
};

/// Exact closed-form phi(z); |z| <= 1 allowed for curve tracing.
/// Throws PoleAtPoint at denominator zeros (z = 1 for Conchoid/Cissoid).
Complex phi_eval(const PhiFamily& fam, Complex z);

/// Taylor coefficients of phi through the given order (order >= 2).
PowerSeries phi_taylor(const PhiFamily& fam, int order);

/// Series of the class member built from p = phi (Schwarz function w(z) = z):
///   Starlike: f(z) = z * exp(int_0^z (phi(t)-1)/t dt)
///   Convex:   f(z) = int_0^z exp(int_0^u (phi(t)-1)/t dt) du
/// Normalization f(0) = 0, f'(0) = 1 holds exactly. Requires order >= 4.
PowerSeries extremal_function(const PhiFamily& fam, ClassKind kind, int order);

/// Closed-form pre-Schwarzian of the sharpness witness for (family, kind).
/// Throws NoWitness for (Cissoid, Starlike); PoleAtPoint at closed-form poles.
Complex witness_preschwarzian(const PhiFamily& fam, ClassKind kind, Complex z);

/// Poles of the witness pre-Schwarzian closed form (all on or outside the
/// unit circle for valid parameters).
std::vector<Complex> witness_poles(const PhiFamily& fam, ClassKind kind);

struct BoundaryPoint {
    double theta;
    Complex w;
};

/// phi(e^{i theta}) sampled at num_points equally spaced angles in [0, 2pi),
/// in increasing theta. For Conchoid/Cissoid the grid is offset by half a
/// step so the pole at theta = 0 is never hit. num_points >= 16.
std::vector<BoundaryPoint> boundary_curve(const PhiFamily& fam, int num_points);

/// Membership of w in phi(D). Limacon uses the region inequality exactly as
/// written; Conchoid/Cissoid use a winding-number test of w against the
/// sampled boundary curve (num_points >= 4096).
bool region_membership(const PhiFamily& fam, Complex w);

/// Conchoid curve constants a = 9(1+alpha)/(2(3+alpha)^2), k = 54/((3+alpha)^2(3-alpha)).
struct RegionConstants {
    double a;
    double k;
};
RegionConstants conchoid_region_constants(double alpha);

/// Implicit-equation residuals of the three boundary curves (zero on the
/// curve). The conchoid/cissoid equations describe full real curves with
/// extra branches, so these are diagnostics only; membership always uses the
/// winding test. The limacon residual is lhs - rhs of the strict inequality
/// (negative strictly inside).
double conchoid_curve_residual(double alpha, Complex w);
double limacon_region_residual(double s, Complex w);
double cissoid_curve_residual(double alpha, Complex w);

/// Winding number of a closed polygon (in order, implicitly closed) around w.
int winding_number(const std::vector<Complex>& polygon, Complex w);

} // namespace psnorm
