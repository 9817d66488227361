#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "psnorm/bounds.hpp"
#include "psnorm/preschwarz.hpp"

using namespace psnorm;

namespace {

PowerSeries identity_series(int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    return PowerSeries(std::move(c));
}

PowerSeries koebe_series(int order) {
    // z/(1-z)^2 = sum n z^n
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = double(n);
    return PowerSeries(std::move(c));
}

PFunction koebe_preschwarzian_closed_form() {
    return closed_form_function(
        [](Complex z) { return (4.0 + 2.0 * z) / ((1.0 + z) * (1.0 - z)); },
        {Complex(1.0, 0.0), Complex(-1.0, 0.0)});
}

} // namespace

TEST_CASE("series_function enforces normalization") {
    CHECK_NOTHROW(series_function(identity_series(8)));
    std::vector<Complex> bad(9);
    bad[0] = 0.5;
    bad[1] = 1.0;
    CHECK_THROWS_AS(series_function(PowerSeries(bad)), std::invalid_argument);
    bad[0] = 0.0;
    bad[1] = 2.0;
    CHECK_THROWS_AS(series_function(PowerSeries(bad)), std::invalid_argument);
}

TEST_CASE("preschwarzian of f(z) = z vanishes identically") {
    auto P = preschwarzian(series_function(identity_series(16)));
    CHECK(std::abs(P(Complex(0.0))) == 0.0);
    CHECK(std::abs(P(Complex(0.3, 0.4))) < 1e-14);
    CHECK(hyperbolic_norm(P).value < 1e-12);
}

TEST_CASE("preschwarzian requires a series-backed input") {
    CHECK_THROWS_AS(preschwarzian(koebe_preschwarzian_closed_form()),
                    std::invalid_argument);
}

TEST_CASE("Koebe pre-Schwarzian: series vs closed form") {
    auto P = preschwarzian(series_function(koebe_series(128)));
    CHECK(std::abs(P(Complex(0.0)) - Complex(4.0)) < 1e-12);
    auto Q = koebe_preschwarzian_closed_form();
    for (double r : {0.2, 0.5, 0.8}) {
        for (int j = 0; j < 8; ++j) {
            const Complex z = std::polar(r, j * std::numbers::pi / 4.0);
            CHECK(std::abs(P(z) - Q(z)) < 1e-9);
        }
    }
}

TEST_CASE("limacon extremal: P(0) = 2(1-s)") {
    const double s = 1.0 / 3.0;
    auto P = preschwarzian(
        series_function(extremal_function(PhiFamily::limacon(s), ClassKind::Starlike, 64)));
    CHECK(std::abs(P(Complex(0.0)) - Complex(2.0 * (1.0 - s))) < 1e-12);
}

TEST_CASE("hyperbolic_norm: Koebe closed form approaches 6 at the cap") {
    auto Q = koebe_preschwarzian_closed_form();
    auto est = hyperbolic_norm(Q);
    CHECK(est.value >= 6.0 - 5e-3);
    CHECK(est.value <= 6.0 + 1e-6);
    // The radial profile is exactly 4 + 2r, so extrapolating the capped value
    // linearly to the boundary recovers the limit 6.
    auto rad = radial_norm(Q, 0.9999);
    const double r1 = rad.argmax.real();
    const auto g = [&](double r) { return (1.0 - r * r) * std::abs(Q(Complex(r, 0.0))); };
    const double extrapolated = 2.0 * g(r1) - g(2.0 * r1 - 1.0);
    CHECK(extrapolated == doctest::Approx(6.0).epsilon(1e-4));
}

TEST_CASE("hyperbolic_norm validates its configuration") {
    auto Q = koebe_preschwarzian_closed_form();
    SearchConfig cfg;
    cfg.radii = 32;
    CHECK_THROWS_AS(hyperbolic_norm(Q, cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.angles = 64;
    CHECK_THROWS_AS(hyperbolic_norm(Q, cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.r_max = 1.0;
    CHECK_THROWS_AS(hyperbolic_norm(Q, cfg), std::invalid_argument);
    CHECK_THROWS_AS(radial_norm(Q, 1.5), std::invalid_argument);
}

TEST_CASE("refining the search grid never loses value") {
    auto Q = koebe_preschwarzian_closed_form();
    SearchConfig coarse;
    coarse.radii = 64;
    coarse.angles = 128;
    SearchConfig fine;
    fine.radii = 128;
    fine.angles = 256;
    SearchConfig finer;
    finer.radii = 256;
    finer.angles = 512;
    const double v0 = hyperbolic_norm(Q, coarse).value;
    const double v1 = hyperbolic_norm(Q, fine).value;
    const double v2 = hyperbolic_norm(Q, finer).value;
    CHECK(v1 >= v0 - 1e-9);
    CHECK(v2 >= v1 - 1e-9);
}

TEST_CASE("radial_norm examples") {
    // Limacon(0) convex: P = 1 identically, profile (1-r^2) peaks at r = 0.
    auto P0 = preschwarzian(
        series_function(extremal_function(PhiFamily::limacon(0.0), ClassKind::Convex, 64)));
    auto est0 = radial_norm(P0, 0.9999);
    CHECK(est0.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(est0.argmax) < 1e-6);
    CHECK(est0.radial_only);

    // Limacon(1/3) convex witness: interior maximum at r_s.
    auto W = witness_function(PhiFamily::limacon(1.0 / 3.0), ClassKind::Convex);
    auto est1 = radial_norm(W, 0.9999);
    CHECK(est1.value == doctest::Approx(0.704204).epsilon(1e-5));
    CHECK(est1.argmax.real() == doctest::Approx(0.215250).epsilon(1e-4));

    // Cissoid(1/3) convex witness: profile (1+r)/(1+r/3) increases to 3/2.
    auto C = witness_function(PhiFamily::cissoid(1.0 / 3.0), ClassKind::Convex);
    auto est2 = radial_norm(C, 0.9999);
    CHECK(std::abs(est2.value - 1.5) < 2e-3);
    CHECK(est2.value <= 1.5);
}

TEST_CASE("limacon starlike witness: radial norm matches the closed bound") {
    for (double s : {1.0 / 3.0, -1.0 / 3.0, 0.2, -0.25}) {
        const auto fam = PhiFamily::limacon(s);
        auto W = witness_function(fam, ClassKind::Starlike);
        auto est = radial_norm(W, 0.9999);
        auto b = theorem_bound(fam, ClassKind::Starlike);
        CHECK(est.value == doctest::Approx(b.value).epsilon(1e-8));
        REQUIRE(b.interior_root.has_value());
        CHECK(est.argmax.real() == doctest::Approx(*b.interior_root).epsilon(1e-4));
    }
}

TEST_CASE("witness vs series pre-Schwarzian: conchoid starlike") {
    const auto fam = PhiFamily::conchoid(0.5);
    auto P = preschwarzian(
        series_function(extremal_function(fam, ClassKind::Starlike, 128)));
    auto W = witness_function(fam, ClassKind::Starlike);
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ur(0.0, 0.8), ut(0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < 100; ++k) {
        const Complex z = std::polar(ur(rng), ut(rng));
        CHECK(std::abs(P(z) - W(z)) < 1e-7);
    }
}

TEST_CASE("radial dominance holds for conchoid but fails for limacon convex s < 0") {
    // Conchoid witnesses peak on the positive real axis.
    auto Wc = witness_function(PhiFamily::conchoid(0.5), ClassKind::Starlike);
    auto full_c = hyperbolic_norm(Wc);
    auto rad_c = radial_norm(Wc, 0.9999);
    CHECK(std::abs(full_c.value - rad_c.value) < 1e-6);

    // Limacon convex with s = -1/3: P = -(1 - s + s z) has |P| maximal toward
    // z = -1, so the full-disk supremum sits on the negative real axis and
    // strictly exceeds the radial profile's limit 1 - s.
    auto Wl = witness_function(PhiFamily::limacon(-1.0 / 3.0), ClassKind::Convex);
    auto full_l = hyperbolic_norm(Wl);
    auto rad_l = radial_norm(Wl, 0.9999);
    CHECK(full_l.value - rad_l.value > 1e-3);
    CHECK(full_l.argmax.real() < 0.0);
    CHECK(full_l.value == doctest::Approx(1.353558).epsilon(1e-4));
}

TEST_CASE("becker_margin") {
    CHECK(becker_margin(series_function(identity_series(16))) < 1e-12);
    auto f = series_function(extremal_function(PhiFamily::limacon(0.0), ClassKind::Convex, 64));
    CHECK(becker_margin(f) <= 1.0);
    CHECK(becker_margin(koebe_preschwarzian_closed_form()) > 1.0);
}

TEST_CASE("Schwarz-Pick: omega = e^{i theta} z^k is a self-map contraction") {
    std::mt19937 rng(20240818);
    std::uniform_real_distribution<double> ur(0.0, 0.999), ut(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 1000; ++trial) {
        const double r = ur(rng);
        const int k = 1 + trial % 3;
        // (1-|z|^2) |omega'(z)| <= 1 - |omega(z)|^2
        const double lhs = (1.0 - r * r) * k * std::pow(r, k - 1);
        const double rhs = 1.0 - std::pow(r, 2 * k);
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("NormEstimate serializes its fields") {
    auto est = radial_norm(koebe_preschwarzian_closed_form(), 0.5);
    nlohmann::json j = est;
    CHECK(j.contains("value"));
    CHECK(j.contains("argmax_re"));
    CHECK(j.contains("argmax_im"));
    CHECK(j["radial_only"].get<bool>());
    CHECK(j.contains("tolerance"));
}
