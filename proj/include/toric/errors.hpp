#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Malformed or contradictory input (files, JSON, flag values).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard tripped: the request is well formed but exceeds the
// configured enumeration limits.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the iteration budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Enumeration limits. Defaults keep every operation at interactive scale.
// relaxed() lifts the weight/count caps and widens the budget; the vertex
// caps stay put because their cost curves are factorial or worse.
struct Limits {
    int max_edge_figure_edges = 6;    // connected edge-figure enumeration
    int max_graph_vertices = 8;       // automorphism search
    int max_expanded_figures = 6;     // inclusion-exclusion subset loop
    int max_sequence_weight = 6;      // multiset / labeled-graph enumeration
    int max_chromatic_weight = 5;     // locally good catalogs
    int max_dc_vertices = 12;         // deletion-contraction
    int max_multinomial_k = 12;       // composition enumeration
    unsigned long long oracle_budget = 100'000'000ULL;

    static Limits relaxed() {
        Limits l;
        l.max_edge_figure_edges = 64;
        l.max_sequence_weight = 64;
        l.max_chromatic_weight = 64;
        l.max_multinomial_k = 24;
        l.oracle_budget *= 100;
        return l;
    }
};

}  // namespace toric
