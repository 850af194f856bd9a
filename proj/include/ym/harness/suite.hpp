#ifndef YM_HARNESS_SUITE_HPP
#define YM_HARNESS_SUITE_HPP

#include <string>
#include <vector>

#include "ym/harness/config.hpp"

namespace ym {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::vector<CheckResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// Names of every registered check, in declaration order.
std::vector<std::string> suite_check_names();

// Run the verification suite: one entry per structural invariant of the
// lattice complex, the structure algebra, the covariant calculus, the
// elliptic solver, the symplectic layer, and the reduction maps, plus an
// informational spectrum report for the field-space two-form.
// cfg.suite_select filters by substring; `jobs` > 1 runs independent checks
// on worker threads with results still reported in declaration order.
SuiteReport run_suite(const RunConfig& cfg, int jobs = 1);

// Deterministic plain-text rendering (no timestamps, no durations):
// identical configs produce byte-identical reports.
std::string format_report(const SuiteReport& rep);

} // namespace ym

#endif
