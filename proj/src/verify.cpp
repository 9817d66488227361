#include "psnorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "psnorm/bounds.hpp"
#include "psnorm/preschwarz.hpp"

namespace psnorm {

bool CriterionResult::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const std::vector<TableRow>& table1_reference() {
    // t_s and norm values for the limacon starlike bound (source table 1).
    static const std::vector<TableRow> rows = {
        {-1.0 / 3.0, 0.251584, 2.76279},
        {1.0 / 3.0, 0.827189, 2.04225},
        {1.0 / 5.0, 0.721552, 2.09044},
        {-1.0 / 5.0, 0.319062, 2.53147},
        {-1.0 / 4.0, 0.289353, 2.61535},
        {1.0 / 9.0, 0.628095, 2.14568},
    };
    return rows;
}

const std::vector<TableRow>& table2_reference() {
    // r_s and norm values for the limacon convex bound, s > 0 (source table 2).
    static const std::vector<TableRow> rows = {
        {1.0 / 3.0, 0.21525, 0.704204},
        {1.0 / 5.0, 0.119633, 0.812135},
        {1.0 / 7.0, 0.081666, 0.863015},
        {2.0 / 9.0, 0.135042, 0.793056},
    };
    return rows;
}

const std::vector<double>& conchoid_alpha_grid() {
    static const std::vector<double> g = {-2.5, -1.0, 0.0, 0.5, 1.0};
    return g;
}

const std::vector<double>& limacon_s_grid() {
    static const std::vector<double> g = {-1.0 / 3.0, -1.0 / 5.0, 0.0,
                                          1.0 / 9.0, 1.0 / 5.0, 1.0 / 3.0};
    return g;
}

const std::vector<double>& cissoid_alpha_grid() {
    static const std::vector<double> g = {0.0, 0.25, 0.45};
    return g;
}

namespace {

constexpr double kRadialRMax = 0.9999;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

CheckResult below(std::string name, double delta, double limit, std::string note = {}) {
    return {std::move(name), delta < limit, delta, limit, std::move(note)};
}

CheckResult holds(std::string name, bool ok, std::string note = {}) {
    return {std::move(name), ok, ok ? 0.0 : 1.0, 1.0, std::move(note)};
}

PhiFamily make_family(Family f, double param) {
    switch (f) {
        case Family::Conchoid: return PhiFamily::conchoid(param);
        case Family::Limacon: return PhiFamily::limacon(param);
        case Family::Cissoid: return PhiFamily::cissoid(param);
    }
    throw std::logic_error("unreachable");
}

struct WitnessCase {
    Family family;
    ClassKind kind;
    const std::vector<double>* grid;
};

std::vector<WitnessCase> witness_cases() {
    return {
        {Family::Conchoid, ClassKind::Starlike, &conchoid_alpha_grid()},
        {Family::Conchoid, ClassKind::Convex, &conchoid_alpha_grid()},
        {Family::Limacon, ClassKind::Starlike, &limacon_s_grid()},
        {Family::Limacon, ClassKind::Convex, &limacon_s_grid()},
        {Family::Cissoid, ClassKind::Convex, &cissoid_alpha_grid()},
    };
}

CriterionResult criterion_table(int id, const std::string& title,
                                const std::vector<TableRow>& rows, ClassKind kind) {
    CriterionResult cr{id, title, {}};
    for (const TableRow& row : rows) {
        const PhiFamily fam = PhiFamily::limacon(row.s);
        const BoundResult b = theorem_bound(fam, kind);
        const double root = kind == ClassKind::Starlike ? quartic_root_ts(row.s)
                                                        : quadratic_root_rs(row.s);
        const double d = std::max(std::abs(root - row.root), std::abs(b.value - row.norm));
        cr.checks.push_back(below("s=" + fmt(row.s), d, 1e-4));
    }
    return cr;
}

CriterionResult criterion_oracle_equivalence() {
    CriterionResult cr{3, "sharpness oracle equivalence on the witness grid", {}};
    for (const WitnessCase& wc : witness_cases()) {
        for (double param : *wc.grid) {
            const PhiFamily fam = make_family(wc.family, param);
            const std::string tag = fam.name() + "(" + fmt(param) + ") " + kind_name(wc.kind);
            const PFunction w = witness_function(fam, wc.kind);
            const BoundResult bound = theorem_bound(fam, wc.kind);
            const NormEstimate rn = radial_norm(w, kRadialRMax);
            cr.checks.push_back(
                below(tag + ": |radial - bound|", std::abs(rn.value - bound.value), 2e-3));
            const NormEstimate hn = hyperbolic_norm(w);
            cr.checks.push_back(
                below(tag + ": |full - radial|", std::abs(hn.value - rn.value), 1e-6));
            if (bound.interior_root) {
                cr.checks.push_back(below(tag + ": interior maximizer",
                                          std::abs(rn.argmax.real() - *bound.interior_root),
                                          1e-3));
            }
        }
    }
    return cr;
}

CriterionResult criterion_classical() {
    CriterionResult cr{4, "classical cross-checks (Koebe, Yamashita order 1/2)", {}};
    const PFunction koebe = closed_form_function(
        [](Complex z) { return (4.0 + 2.0 * z) / ((1.0 + z) * (1.0 - z)); },
        {Complex(1.0, 0.0), Complex(-1.0, 0.0)});
    const double kn = hyperbolic_norm(koebe).value;
    cr.checks.push_back(holds("Koebe norm >= 6 - 5e-3", kn >= 6.0 - 5e-3, "value " + fmt(kn)));
    cr.checks.push_back(holds("Koebe norm <= 6 + 1e-6", kn <= 6.0 + 1e-6, "value " + fmt(kn)));
    const double con0s = theorem_bound(PhiFamily::conchoid(0.0), ClassKind::Starlike).value;
    const double cs0s = theorem_bound(PhiFamily::cissoid(0.0), ClassKind::Starlike).value;
    const double con0c = theorem_bound(PhiFamily::conchoid(0.0), ClassKind::Convex).value;
    cr.checks.push_back(holds("conchoid(0) starlike bound == 4 == 6-4*(1/2)", con0s == 4.0));
    cr.checks.push_back(holds("cissoid(0) starlike bound == 4 == 6-4*(1/2)", cs0s == 4.0));
    cr.checks.push_back(holds("conchoid(0) convex bound == 2 == 4(1-1/2)", con0c == 2.0));
    return cr;
}

struct FamilyGrid {
    Family family;
    const std::vector<double>* grid;
};

std::vector<FamilyGrid> family_grids() {
    return {{Family::Conchoid, &conchoid_alpha_grid()},
            {Family::Limacon, &limacon_s_grid()},
            {Family::Cissoid, &cissoid_alpha_grid()}};
}

CriterionResult criterion_structural(int order) {
    CriterionResult cr{5, "structural identities (duality, subordination, positivity)", {}};
    const int sub_order = std::max(order, 128);
    for (const FamilyGrid& fg : family_grids()) {
        for (double param : *fg.grid) {
            const PhiFamily fam = make_family(fg.family, param);
            const std::string tag = fam.name() + "(" + fmt(param) + ")";

            // Convex/starlike duality: z f_convex' == f_starlike coefficient-wise.
            const PowerSeries star = extremal_function(fam, ClassKind::Starlike, order);
            const PowerSeries conv = extremal_function(fam, ClassKind::Convex, order);
            double dual = 0.0;
            for (int n = 1; n <= order; ++n) {
                dual = std::max(dual, std::abs(static_cast<double>(n) * conv[n] - star[n]));
            }
            cr.checks.push_back(below(tag + ": duality", dual, 1e-10));

            // Subordination recovery: z f'/f of the starlike extremal equals phi.
            const PowerSeries f = extremal_function(fam, ClassKind::Starlike, sub_order);
            std::vector<Complex> num(static_cast<std::size_t>(sub_order));
            std::vector<Complex> den(static_cast<std::size_t>(sub_order));
            for (int n = 0; n < sub_order; ++n) {
                den[static_cast<std::size_t>(n)] = f[n + 1];
                num[static_cast<std::size_t>(n)] = static_cast<double>(n + 1) * f[n + 1];
            }
            const PowerSeries ratio = div(PowerSeries(std::move(num)), PowerSeries(std::move(den)));
            double sub = 0.0;
            for (double r : {0.5, 0.8}) {
                for (int j = 0; j < 24; ++j) {
                    const Complex z = std::polar(r, j * std::numbers::pi / 12.0);
                    sub = std::max(sub, std::abs(eval(ratio, z) - phi_eval(fam, z)));
                }
            }
            cr.checks.push_back(below(tag + ": subordination recovery", sub, 1e-8));

            // phi Taylor positivity through n = 64 (conchoid/cissoid).
            if (fg.family != Family::Limacon) {
                const PowerSeries phi = phi_taylor(fam, 64);
                bool pos = true;
                for (int n = 1; n <= 64; ++n) {
                    pos = pos && phi[n].real() > 0.0 && phi[n].imag() == 0.0;
                }
                cr.checks.push_back(holds(tag + ": Taylor positivity", pos));
            }
        }
    }
    // Class coincidence at the degenerate parameter: both reduce to 1/(1-z).
    const PowerSeries a = phi_taylor(PhiFamily::conchoid(0.0), 64);
    const PowerSeries b = phi_taylor(PhiFamily::cissoid(0.0), 64);
    double coin = 0.0;
    for (int n = 0; n <= 64; ++n) coin = std::max(coin, std::abs(a[n] - b[n]));
    cr.checks.push_back(holds("conchoid(0) == cissoid(0) Taylor (exact)", coin == 0.0));

    // Truncation insensitivity: series-backed P at order vs 2*order.
    for (const FamilyGrid& fg : family_grids()) {
        const PhiFamily fam = make_family(fg.family, fg.grid->back());
        const PFunction p1 =
            preschwarzian(series_function(extremal_function(fam, ClassKind::Starlike, order)));
        const PFunction p2 =
            preschwarzian(series_function(extremal_function(fam, ClassKind::Starlike, 2 * order)));
        const Complex z(0.4, 0.2);
        cr.checks.push_back(below(fam.name() + ": truncation insensitivity",
                                  std::abs(p1.fn(z) - p2.fn(z)), 1e-8));
    }
    return cr;
}

CriterionResult criterion_roots() {
    CriterionResult cr{6, "root residuals and uniqueness", {}};
    for (double s : limacon_s_grid()) {
        const double ts = quartic_root_ts(s);
        const double hs = probe_eval({ProbeId::Hs, s}, ts);
        cr.checks.push_back(below("|Hs(t_s)| at s=" + fmt(s), std::abs(hs), 1e-10));
        if (s > 0.0) {
            const double rs = quadratic_root_rs(s);
            const double res = 3.0 * s * rs * rs + 2.0 * (1.0 - s) * rs - s;
            cr.checks.push_back(below("quadratic residual at s=" + fmt(s), std::abs(res), 1e-12));
        }
        int sign_changes = 0;
        double prev = limacon_quartic(s, 1e-4);
        for (int i = 2; i < 10000; ++i) {
            const double cur = limacon_quartic(s, i * 1e-4);
            if ((prev > 0.0) != (cur > 0.0)) ++sign_changes;
            prev = cur;
        }
        cr.checks.push_back(holds("single sign change at s=" + fmt(s), sign_changes == 1,
                                  "changes " + std::to_string(sign_changes)));
    }
    return cr;
}

CriterionResult criterion_nonsharp(int order) {
    CriterionResult cr{7, "non-sharp cissoid starlike behavior", {}};
    for (double alpha : cissoid_alpha_grid()) {
        const PhiFamily fam = PhiFamily::cissoid(alpha);
        const BoundResult bound = theorem_bound(fam, ClassKind::Starlike);
        const PFunction p =
            preschwarzian(series_function(extremal_function(fam, ClassKind::Starlike, order)));
        const NormEstimate rn = radial_norm(p, kRadialRMax);
        cr.checks.push_back(holds("numeric norm <= bound at alpha=" + fmt(alpha),
                                  rn.value <= bound.value + 1e-12,
                                  "gap " + fmt(bound.value - rn.value)));
    }
    const BoundResult degenerate = theorem_bound(PhiFamily::cissoid(0.5), ClassKind::Starlike);
    cr.checks.push_back(holds("alpha=1/2 reported unbounded",
                              degenerate.unbounded && std::isinf(degenerate.value)));
    return cr;
}

CriterionResult criterion_probes() {
    CriterionResult cr{8, "auxiliary-function probe suite", {}};
    constexpr int kSamples = 1000;
    constexpr double kSlack = 1e-12;

    const auto monotone = [&](const std::string& name, ProbeFunction p, bool increasing,
                              double lo, double hi) {
        double worst = 0.0; // most violating signed difference
        double prev = probe_eval(p, lo);
        for (int i = 1; i < kSamples; ++i) {
            const double x = lo + (hi - lo) * i / (kSamples - 1);
            const double cur = probe_eval(p, x);
            const double d = increasing ? prev - cur : cur - prev;
            worst = std::max(worst, d);
            prev = cur;
        }
        cr.checks.push_back(below(name, worst, kSlack));
    };

    for (double a : conchoid_alpha_grid()) {
        monotone("G2 increasing, alpha=" + fmt(a), {ProbeId::G2, a}, true, 1e-3, 1.0 - 1e-3);
        monotone("G7 increasing, alpha=" + fmt(a), {ProbeId::G7, a}, true, 0.0, 1.0 - 1e-3);
    }
    for (double a : cissoid_alpha_grid()) {
        monotone("G6 increasing, alpha=" + fmt(a), {ProbeId::G6, a}, true, 1e-3, 1.0 - 1e-3);
        monotone("G9 increasing, alpha=" + fmt(a), {ProbeId::G9, a}, true, 0.0, 1.0 - 1e-3);
    }
    for (double s : limacon_s_grid()) {
        if (s <= 0.0) {
            monotone("G8 decreasing, s=" + fmt(s), {ProbeId::G8, s}, false, 0.0, 1.0 - 1e-3);
        }
    }

    // Partial finite differences in r (t fixed) must be non-increasing.
    const auto radial_decreasing = [&](const std::string& name, ProbeFunction p) {
        double worst = 0.0;
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            double prev = probe_eval(p, t, t);
            for (int i = 1; i < kSamples; ++i) {
                const double r = t + (0.9995 - t) * i / (kSamples - 1);
                const double cur = probe_eval(p, r, t);
                worst = std::max(worst, cur - prev);
                prev = cur;
            }
        }
        cr.checks.push_back(below(name, worst, kSlack));
    };
    for (double a : conchoid_alpha_grid()) {
        radial_decreasing("dG1/dr <= 0, alpha=" + fmt(a), {ProbeId::G1, a});
    }
    for (double s : limacon_s_grid()) {
        radial_decreasing("dG3/dr <= 0, s=" + fmt(s), {ProbeId::G3, s});
    }
    for (double a : cissoid_alpha_grid()) {
        radial_decreasing("dG5/dr <= 0, alpha=" + fmt(a), {ProbeId::G5, a});
    }

    for (ProbeId id : {ProbeId::H1, ProbeId::H2}) {
        double worst = 1.0;
        for (int i = 0; i < kSamples; ++i) {
            const double alpha = -1.5 + 1.5 * i / kSamples; // [-3/2, 0)
            worst = std::min(worst, probe_eval({id, 0.0}, alpha));
        }
        cr.checks.push_back(holds(std::string(id == ProbeId::H1 ? "H1" : "H2")
                                      + " > 0 on [-3/2, 0)",
                                  worst > 0.0, "min " + fmt(worst)));
    }
    return cr;
}

} // namespace

std::vector<CriterionResult> run_verification(int order) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_table(1, "table 1 reproduction (limacon starlike)",
                                  table1_reference(), ClassKind::Starlike));
    out.push_back(criterion_table(2, "table 2 reproduction (limacon convex)",
                                  table2_reference(), ClassKind::Convex));
    out.push_back(criterion_oracle_equivalence());
    out.push_back(criterion_classical());
    out.push_back(criterion_structural(order));
    out.push_back(criterion_roots());
    out.push_back(criterion_nonsharp(order));
    out.push_back(criterion_probes());
    return out;
}

} // namespace psnorm
