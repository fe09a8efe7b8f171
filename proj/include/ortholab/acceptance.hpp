#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ortholab {

// One row of the acceptance grid.  `detail` carries the failing sub-checks
// (or a short success summary); results are deterministic apart from timing.
struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance grid (criteria 1-9) and returns one result per
// criterion.  Progress lines go to `log` when given.  Never throws: criterion
// errors are folded into the corresponding result.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

bool all_pass(const std::vector<CriterionResult>& rs);

}  // namespace ortholab
