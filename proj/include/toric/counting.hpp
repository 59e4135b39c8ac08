#pragma once

#include "toric/catalog.hpp"
#include "toric/overlap.hpp"
#include "toric/poly.hpp"

namespace toric {

// Placement-count polynomial, exact for every side length n >= n0. The
// variable is N = n^d on the torus and n itself on the box.
struct PlacementPolynomial {
    Poly poly;
    bool torus = true;
    long long n0 = 1;
};

// Number of multisets of placements of s on the torus T^d_n with pairwise
// disjoint vertex sets, by direct enumeration.
unsigned long long brute_count_torus(const FigureMultiset& s, int n, const Limits& limits = {});

// Same on the box {0..n-1}^d with no wraparound.
unsigned long long brute_count_box(const FigureMultiset& s, int n, const Limits& limits = {});

// Number of offset tuples on T^d_n realizing at least the overlaps demanded
// by g's edges (non-edges unconstrained). For connected g and n past the
// figure extents this equals |configurations| * n^d.
unsigned long long count_consistent_torus(const OverlapGraph& g, int n, const Limits& limits = {});

PlacementPolynomial f_polynomial_torus(const FigureMultiset& s, const Limits& limits = {});
PlacementPolynomial f_polynomial_box(const FigureMultiset& s, const Limits& limits = {});

// All multisets of catalog figures with total weight exactly k.
std::vector<FigureMultiset> weight_multisets(const Catalog& catalog, int weight,
                                             const Limits& limits = {});

// p_0..p_K where p_k sums f_polynomial_torus over all multisets of catalog
// figures with total weight k.
SequenceTable p_sequence_via_multisets(const Catalog& catalog, int max_weight,
                                       const Limits& limits = {});

}  // namespace toric
