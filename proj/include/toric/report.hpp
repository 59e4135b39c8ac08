#pragma once

#include <vector>

#include "json.hpp"
#include "toric/errors.hpp"
#include "toric/figure_set_io.hpp"

namespace toric {

struct RunOptions {
    bool box = false;
    int max_weight = 2;
    std::vector<int> verify_n;
    bool allow_large = false;

    Limits limits() const { return allow_large ? Limits::relaxed() : Limits(); }
};

// Reports share one shape: command, variable, polynomials (exact coefficient
// strings, lowest degree first), pretty forms, checks, and an overall "ok".
nlohmann::json run_poly_report(const FigureSet& fs, const RunOptions& opts);
nlohmann::json run_sequence_report(const FigureSet& fs, const RunOptions& opts);
nlohmann::json run_chromatic_report(int dim, const RunOptions& opts);
nlohmann::json run_selftest_report(const RunOptions& opts);

}  // namespace toric
