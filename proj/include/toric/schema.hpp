#pragma once

#include <string>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/overlap.hpp"
#include "toric/series.hpp"

namespace toric {

// Connected overlap graph over catalog figures, canonical up to
// label-preserving isomorphism, tagged with its total weight.
struct LabeledConnectedGraph {
    OverlapGraph graph;
    int weight = 0;
};

std::vector<LabeledConnectedGraph> enumerate_lcg(const Catalog& catalog, int max_weight,
                                                 const Limits& limits = {});

// A(x) with zero constant term; the x^k coefficient sums a_coeff over the
// labeled connected graphs of weight k.
Series<Rational> connected_series(const Catalog& catalog, int max_weight,
                                  const Limits& limits = {});

// q_0..q_K from exp(N * A(x)).
SequenceTable q_sequence_via_schema(const Catalog& catalog, int max_weight,
                                    const Limits& limits = {});

struct BinomialReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Checks q_0 = 1, the power law (sum q_i(1) x^i)^N = sum q_i(N) x^i for
// N = 0..2K, and the convolution q_n(a+b) = sum q_i(a) q_{n-i}(b) on the
// grid 0 <= a, b <= K.
BinomialReport verify_binomial(const SequenceTable& table);

}  // namespace toric
