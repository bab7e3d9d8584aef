#pragma once

// Acceptance checks run by the `verify` command and the acceptance binary.

#include <iosfwd>
#include <string>
#include <vector>

namespace hydrocouple::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // measured values against their thresholds
    double seconds = 0.0;
};

CriterionResult well_balance();             // 1
CriterionResult no_numerical_flooding();    // 2
CriterionResult mass_conservation();        // 3
CriterionResult dam_break_oracle();         // 4
CriterionResult hll_properties();           // 5
CriterionResult mode_nesting();             // 6
CriterionResult desk_scale_case1();         // 7
CriterionResult desk_scale_case3();         // 8

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id);

struct Options {
    std::vector<int> only;  // empty runs every criterion
};

/// Runs the selected criteria, printing one line per criterion to `out` if given.
std::vector<CriterionResult> run_all(const Options& options, std::ostream* out = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);

} // namespace hydrocouple::verify
