#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "psnorm/maminda.hpp"
#include "psnorm/series.hpp"

namespace psnorm {

/// An analytic function on the disk, either backed by a normalized truncated
/// series (f(0) = 0, f'(0) = 1) or by a closed-form evaluator with a declared
/// pole set. Series-backed norm searches are capped at |z| <= 0.9 where the
/// truncation guard keeps evaluation trustworthy.
struct PFunction {
    std::function<Complex(Complex)> fn;
    std::vector<Complex> poles;
    double r_cap = 1.0;
    std::optional<PowerSeries> series;

    Complex operator()(Complex z) const { return fn(z); }
    bool series_backed() const { return series.has_value(); }
};

/// Wraps a normalized series f (class A: f(0) = 0, f'(0) = 1).
PFunction series_function(PowerSeries f);

/// Wraps a closed-form evaluator with its declared poles.
PFunction closed_form_function(std::function<Complex(Complex)> fn,
                               std::vector<Complex> poles = {});

/// P_f = f''/f', realized as div(f'', f') for a series-backed f.
/// Requires a series-backed input; f'(0) = 1 so the division is valid near 0.
PFunction preschwarzian(const PFunction& f);

/// Closed-form pre-Schwarzian of the sharpness witness for (family, kind),
/// packaged for norm searches. Throws NoWitness for (Cissoid, Starlike).
PFunction witness_function(const PhiFamily& fam, ClassKind kind);

struct SearchConfig {
    int radii = 128;          // >= 64
    int angles = 256;         // >= 128
    double r_max = 0.9999;    // < 1
    double refinement_tol = 1e-10;
    int top_angles = 8;
};

/// Result of a supremum search for (1-|z|^2)|P(z)|.
struct NormEstimate {
    double value = 0.0;
    Complex argmax{0.0, 0.0};
    bool radial_only = false;
    int radii = 0;
    int angles = 0;
    double tolerance = 0.0;
    bool pole_skipped = false;
};

void to_json(nlohmann::json& j, const NormEstimate& e);

/// Two-stage sup search over the disk: coarse polar grid, then golden-section
/// refinement in r along the best angles plus local angle refinement.
/// Deterministic: ties broken toward smaller radius, then smaller angle.
NormEstimate hyperbolic_norm(const PFunction& P, const SearchConfig& cfg = {});

/// Sup of (1-r^2)|P(r)| over r in [0, r_max] by dense scan (4096 nodes) plus
/// golden-section polish.
NormEstimate radial_norm(const PFunction& P, double r_max);

/// Sup over the disk of (1-|z|^2)|z P_f(z)|; a value <= 1 certifies
/// univalence (Becker). Series-backed inputs are differentiated first;
/// closed-form inputs are taken to already be P_f.
double becker_margin(const PFunction& f, const SearchConfig& cfg = {});

} // namespace psnorm
