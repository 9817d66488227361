#pragma once

#include <string>
#include <vector>

#include "psnorm/maminda.hpp"

namespace psnorm {

struct CheckResult {
    std::string name;
    bool pass = false;
    double delta = 0.0;   // measured deviation (check-specific meaning)
    double limit = 0.0;   // threshold the deviation was compared against
    std::string note;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    bool pass() const;
};

/// Reference values from the source tables (golden constants the `tables`
/// subcommand and the acceptance suite diff against).
struct TableRow {
    double s;
    double root;   // t_s (table 1) or r_s (table 2)
    double norm;
};
const std::vector<TableRow>& table1_reference();
const std::vector<TableRow>& table2_reference();

/// Parameter grids used by the oracle-equivalence and probe checks.
const std::vector<double>& conchoid_alpha_grid();
const std::vector<double>& limacon_s_grid();
const std::vector<double>& cissoid_alpha_grid();

/// Runs the full verification suite (table reproduction, oracle equivalence,
/// classical cross-checks, structural identities, root residuals, non-sharp
/// case behavior, monotonicity probes). `order` is the series truncation
/// order used by the series-backed checks.
std::vector<CriterionResult> run_verification(int order = 64);

} // namespace psnorm
