#pragma once

#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

struct CheckRow {
    std::string name;
    bool pass = true;
    std::string details;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::vector<CheckRow> checks;
};

// The full acceptance suite: every emitted polynomial cross-checked against
// an independent brute-force oracle, all comparisons exact.
std::vector<CriterionResult> run_acceptance(const Limits& limits = {});

}  // namespace toric
