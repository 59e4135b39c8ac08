#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/counting.hpp"
#include "toric/poly.hpp"

namespace toric {

// Lattice edge {base, base + unit(dir)}. On a torus the base carries the
// representative coordinates in [0, n)^d.
struct GridEdge {
    Point base;
    int dir = 0;

    bool operator==(const GridEdge&) const = default;
};

// Natural-order key: direction index descending (last axis first), then the
// projection of the base along the remaining axes lexicographically, then
// the coordinate along the edge. Comparing keys is translation invariant.
std::vector<int> edge_order_key(const GridEdge& e, int dim);
std::strong_ordering edge_compare(const GridEdge& a, const GridEdge& b, int dim);

// The natural ordering constrains edges two ways only: everything not
// parallel to the first axis precedes everything parallel to it, and edges
// parallel to the first axis are graded by the projection of their base onto
// the remaining axes. `strict` refines the remaining ties (needed by the
// Whitney-style coefficient counts, which require a linear order); `coarse`
// keeps them, so a broken circuit must close with a *uniquely* largest edge.
// The two agree on any cycle whose top grade holds a single edge.
enum class NaturalOrder { strict, coarse };

// A connected edge figure is locally good when no unit pair (u, v) of its
// vertices is joined inside the figure by edges strictly below {u, v} in the
// natural order; equivalently the figure contains no broken circuit of the
// infinite grid.
bool is_locally_good(const Figure& f, NaturalOrder order = NaturalOrder::strict);

// All locally good connected edge figures with 1..max_weight edges, weighted
// by edge count.
Catalog locally_good_catalog(int dim, int max_weight, const Limits& limits = {});

struct ChromaticCoefficientTable {
    int dim = 0;
    SequenceTable table;  // qt_0..qt_K in N = n^d
};

// Assembles the sequence over the locally good catalog along both routes
// (multiset inclusion-exclusion and exp of the connected series) and insists
// they agree.
ChromaticCoefficientTable chromatic_coefficients(int dim, int max_weight,
                                                 const Limits& limits = {});

// Number of k-subsets of E(T^d_n) containing no broken circuit, counted
// directly. Requires n >= 3 so the torus graph is simple.
unsigned long long brute_bc_free_count(int dim, int n, int k, const Limits& limits = {});

// Chromatic polynomial by deletion-contraction; parallel edges are collapsed
// and loops zero the result.
Poly chromatic_poly_small(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                          const Limits& limits = {});

// Edge list of T^d_n with vertices encoded in [0, n^d).
std::vector<std::pair<int, int>> torus_graph_edges(int dim, int n);

// Cycle-free k-subsets of E(T^d_n) tallied by local (per-component lift)
// and global (broken-circuit) goodness, both under the coarse natural
// ordering; under it |gb| == |bg|, which the strict refinement breaks once
// k reaches n - 1 (a full line minus its largest edge is locally a straight
// path yet globally closes a broken circuit). Requires k < n so component
// lifts to the infinite grid are unambiguous.
struct GoodnessCounts {
    unsigned long long gg = 0;  // locally good, globally good
    unsigned long long gb = 0;  // locally good, globally bad
    unsigned long long bg = 0;  // locally bad, globally good
    unsigned long long bb = 0;
    unsigned long long cyclic = 0;  // excluded from the four tallies
};

GoodnessCounts classify_cyclefree_subsets(int dim, int n, int k, const Limits& limits = {});

}  // namespace toric
