#include "doctest.h"

#include <vector>

#include "toric/counting.hpp"
#include "toric/errors.hpp"
#include "toric/figure.hpp"
#include "toric/poly.hpp"
#include "toric/schema.hpp"

using namespace toric;

namespace {

Figure fig_h() { return figure_from_cells(2, {{0, 0}, {1, 0}}); }
Figure fig_v() { return figure_from_cells(2, {{0, 0}, {0, 1}}); }

Catalog dominoes() { return make_catalog(2, {fig_h(), fig_v()}, {1, 1}); }

}  // namespace

TEST_CASE("connected graph classes over the domino catalog") {
    auto lcg1 = enumerate_lcg(dominoes(), 1);
    CHECK(lcg1.size() == 2);  // single H, single V

    auto lcg2 = enumerate_lcg(dominoes(), 2);
    // Weight 2 adds the connected pairs HH, HV, VV.
    int pairs = 0;
    for (const auto& g : lcg2) {
        CHECK(graph_connected(g.graph));
        CHECK(g.weight == g.graph.size());
        if (g.weight == 2) {
            ++pairs;
            CHECK(g.graph.edges.size() == 1);
        }
    }
    CHECK(pairs == 3);
    CHECK(lcg2.size() == 5);
}

TEST_CASE("connected series of the domino catalog") {
    Series<Rational> a2 = connected_series(dominoes(), 2);
    REQUIRE(a2.order() == 2);
    CHECK(a2.c[0] == Rational(0));
    CHECK(a2.c[1] == Rational(2));
    CHECK(a2.c[2] == Rational(-7));

    Series<Rational> a3 = connected_series(dominoes(), 3);
    CHECK(a3.c[3] == ratio(116, 3));
}

TEST_CASE("schema route agrees with direct multiset counting") {
    Catalog cat = dominoes();
    SequenceTable via_schema = q_sequence_via_schema(cat, 3);
    SequenceTable via_multisets = p_sequence_via_multisets(cat, 3);
    REQUIRE(via_schema.q.size() == 4);
    CHECK(via_schema == via_multisets);
    CHECK(via_schema.q[1].str() == "2N");
    CHECK(via_schema.q[2].str() == "2N^2 - 7N");
}

TEST_CASE("sequence terms clear denominators at k factorial") {
    SequenceTable t = q_sequence_via_schema(dominoes(), 3);
    Rational fact = 1;
    for (std::size_t k = 0; k < t.q.size(); ++k) {
        if (k > 0) fact = fact * Rational(static_cast<long long>(k));
        CHECK((t.q[k] * Poly(fact)).has_integer_coeffs());
        CHECK(t.q[k].is_integer_valued());
    }
}

TEST_CASE("binomial property holds and tampering breaks it") {
    SequenceTable t = q_sequence_via_schema(dominoes(), 3);
    BinomialReport ok = verify_binomial(t);
    CHECK(ok.pass);
    CHECK(ok.failures.empty());

    SequenceTable bad = t;
    bad.q[1] = Poly::from_coeffs({ratio(1, 1), ratio(2, 1)});  // 2N + 1
    BinomialReport broken = verify_binomial(bad);
    CHECK(!broken.pass);
    CHECK(!broken.failures.empty());

    SequenceTable wrong_head = t;
    wrong_head.q[0] = Poly(2);
    CHECK(!verify_binomial(wrong_head).pass);
}

TEST_CASE("single-figure catalog gives binomial coefficients") {
    // One cell in one dimension: q_k counts k disjoint cells among N, so
    // q_k = C(N, k) and the binomial property is inherited.
    Figure cell = figure_from_cells(1, {{0}});
    Catalog cat = make_catalog(1, {cell}, {1});
    SequenceTable t = q_sequence_via_schema(cat, 4);
    CHECK(t.q[2] == Poly::from_coeffs({ratio(0, 1), ratio(-1, 2), ratio(1, 2)}));
    CHECK(t.q[3](Rational(5)) == Rational(10));
    CHECK(t.q[4](Rational(6)) == Rational(15));
    CHECK(verify_binomial(t).pass);
}

TEST_CASE("schema guards") {
    CHECK_THROWS_AS(q_sequence_via_schema(dominoes(), 7), GuardError);
    CHECK_THROWS_AS(enumerate_lcg(dominoes(), -1), std::invalid_argument);
}
