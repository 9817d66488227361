// Acceptance gate: runs the full verification suite and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.
#include <cstdio>

#include "psnorm/verify.hpp"

int main() {
    const auto results = psnorm::run_verification();
    int failures = 0;
    for (const auto& crit : results) {
        const bool ok = crit.pass();
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", crit.id,
                    crit.title.c_str());
        if (!ok) {
            ++failures;
            for (const auto& check : crit.checks) {
                if (check.pass) continue;
                std::printf("         %-48s delta=%.6e limit=%.6e %s\n",
                            check.name.c_str(), check.delta, check.limit,
                            check.note.c_str());
            }
        }
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
