#pragma once

#include <utility>
#include <vector>

#include "toric/figure.hpp"
#include "toric/poly.hpp"

namespace toric {

// Multiset of figures: distinct figures with multiplicities >= 1, sorted.
struct FigureMultiset {
    int dim = 0;
    std::vector<std::pair<Figure, int>> entries;

    int total() const {
        int t = 0;
        for (const auto& [fig, c] : entries) t += c;
        return t;
    }
};

FigureMultiset make_multiset(int dim, const std::vector<Figure>& figures);

// Weighted set of connected figures with positive integer weights.
struct Catalog {
    int dim = 0;
    std::vector<Figure> figures;
    std::vector<int> weights;

    int size() const { return static_cast<int>(figures.size()); }
};

Catalog make_catalog(int dim, std::vector<Figure> figures, std::vector<int> weights);
Catalog truncate_catalog(const Catalog& c, int max_weight);

// q_0..q_K, q_0 = 1; the table owns no variable name, callers decide
// between N = n^d (torus) and n (box).
struct SequenceTable {
    std::vector<Poly> q;

    int max_weight() const { return static_cast<int>(q.size()) - 1; }
    bool operator==(const SequenceTable&) const = default;
};

}  // namespace toric
