#include "psnorm/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace psnorm {

namespace {

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

} // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw std::invalid_argument("PowerSeries: order must be at least 1");
    }
    for (const Complex& c : coeffs_) {
        if (!finite(c)) {
            throw std::invalid_argument("PowerSeries: non-finite coefficient");
        }
    }
}

PowerSeries PowerSeries::zero(int order) {
    return PowerSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

PowerSeries PowerSeries::one(int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1.0;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::identity(int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = 0.0;
        for (int j = 0; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        c[static_cast<std::size_t>(k)] = acc;
    }
    return PowerSeries(std::move(c));
}

PowerSeries div(const PowerSeries& num, const PowerSeries& den, double eps) {
    if (std::abs(den[0]) <= eps) {
        throw ZeroConstantTerm("div: divisor constant term below epsilon");
    }
    const int n = std::min(num.order(), den.order());
    std::vector<Complex> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = num[k];
        for (int j = 0; j < k; ++j) {
            acc -= q[static_cast<std::size_t>(j)] * den[k - j];
        }
        q[static_cast<std::size_t>(k)] = acc / den[0];
    }
    return PowerSeries(std::move(q));
}

PowerSeries exp_series(const PowerSeries& a) {
    if (std::abs(a[0]) != 0.0) {
        throw NonzeroConstantTerm("exp_series: exponent must vanish at 0");
    }
    const int n = a.order();
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        Complex acc = 0.0;
        for (int j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * a[j] * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    return PowerSeries(std::move(e));
}

PowerSeries integrate_over_z(const PowerSeries& a) {
    if (std::abs(a[0]) != 0.0) {
        throw NonzeroConstantTerm("integrate_over_z: a(0) must be 0 so a(t)/t is analytic");
    }
    const int n = a.order();
    std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        b[static_cast<std::size_t>(k)] = a[k] / static_cast<double>(k);
    }
    return PowerSeries(std::move(b));
}

PowerSeries derivative(const PowerSeries& a) {
    const int n = a.order();
    std::vector<Complex> d(static_cast<std::size_t>(std::max(n - 1, 1)) + 1);
    for (int k = 1; k <= n; ++k) {
        d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * a[k];
    }
    return PowerSeries(std::move(d));
}

Complex eval(const PowerSeries& a, Complex z) {
    Complex acc = a[a.order()];
    for (int k = a.order() - 1; k >= 0; --k) {
        acc = acc * z + a[k];
    }
    return acc;
}

double truncation_tail_guard(double coeff_scale, double coeff_ratio, double r, int order) {
    const double q = coeff_ratio * r;
    if (!(q < 1.0)) {
        throw DomainError("truncation_tail_guard: rho*r must be < 1");
    }
    return coeff_scale * std::pow(q, order + 1) / (1.0 - q);
}

} // namespace psnorm
