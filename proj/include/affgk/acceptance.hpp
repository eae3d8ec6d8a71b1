#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affgk::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Run the desk-scale verification suite: every criterion prints one
/// pass/fail line to `progress` (when given) as it completes.
std::vector<CriterionResult> run_all(std::ostream* progress = nullptr, int threads = 1);

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace affgk::acceptance
