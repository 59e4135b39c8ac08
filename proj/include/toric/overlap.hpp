#pragma once

#include <utility>
#include <vector>

#include "toric/figure.hpp"
#include "toric/rational.hpp"

namespace toric {

// Graph whose vertices carry figures; an edge demands that the two placed
// figures share a lattice vertex.
struct OverlapGraph {
    std::vector<Figure> figures;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique

    int size() const { return static_cast<int>(figures.size()); }
    auto operator<=>(const OverlapGraph&) const = default;
};

// Validates indices, forbids loops, normalizes and dedups the edge list.
OverlapGraph make_overlap_graph(std::vector<Figure> figures,
                                std::vector<std::pair<int, int>> edges);

bool graph_connected(const OverlapGraph& g);
std::vector<std::vector<int>> graph_components(const OverlapGraph& g);
OverlapGraph induced_subgraph(const OverlapGraph& g, const std::vector<int>& vertices);

enum class SpanningTree { bfs, dfs };

// One offset per graph vertex, vertex 0 pinned to the origin, so every
// translation class of a placement consistent with the graph appears once.
using Configuration = std::vector<Point>;

// All configurations of a connected graph, found by walking a spanning tree
// (offset candidates are pairwise vertex differences) and filtering on the
// non-tree edges. The tree choice cannot change the result.
std::vector<Configuration> enumerate_configurations(const OverlapGraph& g,
                                                    SpanningTree tree = SpanningTree::bfs,
                                                    const Limits& limits = {});

struct WeightedConfigCount {
    long long distinct = 0;  // multiset classes of configurations
    Rational sum;            // sum over classes of (realizations)/prod(c_i!)
};

// Groups the anchored configurations into classes that induce the same
// multiset of placed figures (translation + equal-figure permutation). Each
// class weighs its anchored realizations divided by prod(c_i!), so the sum
// collapses to |configurations| / prod(c_i!).
WeightedConfigCount weighted_config_sum(const OverlapGraph& g, const Limits& limits = {});

// Order of the automorphism group fixing each vertex's figure.
BigInt aut_size(const OverlapGraph& g, const Limits& limits = {});

// prod(c_i!) / |Aut|, always a positive integer.
BigInt alpha(const OverlapGraph& g, const Limits& limits = {});

// (-1)^{edge count} * alpha * weighted configuration sum.
Rational a_coeff(const OverlapGraph& g, const Limits& limits = {});

}  // namespace toric
