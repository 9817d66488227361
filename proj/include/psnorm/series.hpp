#pragma once

#include <complex>
#include <span>
#include <vector>

#include "psnorm/errors.hpp"

namespace psnorm {

using Complex = std::complex<double>;

/// Truncated Taylor series of an analytic function about 0.
///
/// coefficient(n) is the coefficient of z^n; order() = number of stored
/// coefficients minus one. All arithmetic truncates to the minimum order of
/// its operands; truncation is explicit, never silent growth.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries zero(int order);
    static PowerSeries one(int order);
    /// The identity map z.
    static PowerSeries identity(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Complex& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    std::span<const Complex> coeffs() const { return coeffs_; }

private:
    std::vector<Complex> coeffs_;
};

inline constexpr double kDefaultDivEpsilon = 1e-12;

/// Cauchy product truncated to min(order a, order b).
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// Series quotient; requires |den[0]| > eps, throws ZeroConstantTerm otherwise.
PowerSeries div(const PowerSeries& num, const PowerSeries& den,
                double eps = kDefaultDivEpsilon);

/// exp of a series with vanishing constant term, via the standard recurrence
/// e0 = 1, n*e_n = sum_{k=1..n} k a_k e_{n-k}. Throws NonzeroConstantTerm.
PowerSeries exp_series(const PowerSeries& a);

/// For a with a[0] = 0, returns b(z) = integral_0^z a(t)/t dt,
/// i.e. b[n] = a[n]/n for n >= 1. Throws NonzeroConstantTerm.
PowerSeries integrate_over_z(const PowerSeries& a);

/// Term-wise derivative; order drops by one.
PowerSeries derivative(const PowerSeries& a);

/// Horner evaluation of the truncated polynomial at z.
Complex eval(const PowerSeries& a, Complex z);

/// Upper bound on the evaluation error of a truncated series at |z| <= r when
/// the dropped coefficients satisfy |c_n| <= M * rho^n: M*(rho*r)^(N+1)/(1-rho*r).
/// Requires rho*r < 1.
double truncation_tail_guard(double coeff_scale, double coeff_ratio, double r, int order);

} // namespace psnorm
