#include "doctest.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "toric/chromatic.hpp"
#include "toric/errors.hpp"
#include "toric/figure.hpp"
#include "toric/poly.hpp"
#include "toric/rational.hpp"

using namespace toric;

namespace {

bool below(const GridEdge& a, const GridEdge& b) {
    return edge_compare(a, b, 2) == std::strong_ordering::less;
}

Figure square_minus(int skip) {
    // Unit square boundary with one side removed: 0 bottom, 1 right, 2 top,
    // 3 left.
    std::vector<Point> verts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<std::pair<int, int>> sides = {{0, 1}, {1, 3}, {2, 3}, {0, 2}};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        if (i != skip) edges.push_back(sides[i]);
    return canonicalize(2, verts, edges);
}

}  // namespace

TEST_CASE("edge order around a unit square") {
    GridEdge bottom{{0, 0}, 0};
    GridEdge top{{0, 1}, 0};
    GridEdge left{{0, 0}, 1};
    GridEdge right{{1, 0}, 1};
    // Verticals precede horizontals; horizontals sort by row.
    CHECK(below(left, bottom));
    CHECK(below(right, bottom));
    CHECK(below(left, right));
    CHECK(below(bottom, top));
    CHECK(edge_compare(top, top, 2) == std::strong_ordering::equal);

    // Along-axis coordinate breaks ties within a row.
    CHECK(below(bottom, GridEdge{{1, 0}, 0}));

    // Keys are translation invariant as differences.
    GridEdge a{{3, 5}, 0};
    GridEdge b{{4, 5}, 1};
    CHECK(below(b, a) == below(GridEdge{{0, 0}, 1}, GridEdge{{-1, 0}, 0}));
}

TEST_CASE("locally good figures") {
    CHECK(is_locally_good(figure_from_cells(2, {{0, 0}, {1, 0}})));
    CHECK(is_locally_good(figure_from_cells(2, {{0, 0}, {0, 1}})));
    // The square with the top edge removed joins that edge's endpoints by
    // smaller edges: a broken circuit.
    CHECK(!is_locally_good(square_minus(2)));
    CHECK(is_locally_good(square_minus(0)));
    CHECK(is_locally_good(square_minus(1)));
    CHECK(is_locally_good(square_minus(3)));
}

TEST_CASE("strict and coarse order agree up to unique-maximum cycles") {
    for (int skip = 0; skip < 4; ++skip) {
        CHECK(is_locally_good(square_minus(skip)) ==
              is_locally_good(square_minus(skip), NaturalOrder::coarse));
    }

    // Boundary of a 1x2 rectangle minus the right half of its top: the two
    // top-row horizontals tie in the coarse grading, so no single largest
    // edge closes the circuit.
    Figure f = canonicalize(
        2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
        {{0, 1}, {1, 2}, {0, 3}, {2, 5}, {3, 4}});
    CHECK(!is_locally_good(f, NaturalOrder::strict));
    CHECK(is_locally_good(f, NaturalOrder::coarse));
}

TEST_CASE("locally good catalog sizes") {
    Catalog k2 = locally_good_catalog(2, 2);
    CHECK(k2.size() == 8);  // 2 single edges + all 6 two-edge figures

    Catalog k3 = locally_good_catalog(2, 3);
    int three = 0;
    for (int i = 0; i < k3.size(); ++i) {
        CHECK(k3.weights[i] == k3.figures[i].edge_count());
        if (k3.weights[i] == 3) ++three;
    }
    CHECK(three == 21);  // of the 22 connected three-edge figures
}

TEST_CASE("deletion-contraction chromatic polynomial") {
    Poly x = Poly::variable();
    CHECK(chromatic_poly_small(1, {}) == x);
    CHECK(chromatic_poly_small(2, {{0, 1}}) == x * x - x);
    // Triangle: x(x-1)(x-2).
    Poly tri = chromatic_poly_small(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.str("x") == "x^3 - 3x^2 + 2x");
    // Parallel edges collapse, loops kill the polynomial.
    CHECK(chromatic_poly_small(2, {{0, 1}, {1, 0}}) == x * x - x);
    CHECK(chromatic_poly_small(2, {{0, 1}, {1, 1}}).is_zero());
    CHECK_THROWS_AS(chromatic_poly_small(13, {}), GuardError);
    CHECK_THROWS_AS(chromatic_poly_small(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("torus graph edges") {
    auto e1 = torus_graph_edges(1, 5);
    CHECK(e1.size() == 5);
    auto e2 = torus_graph_edges(2, 3);
    CHECK(e2.size() == 18);  // 2 * n^2
    for (const auto& [u, v] : e2) {
        CHECK(u >= 0);
        CHECK(v < 9);
    }
}

TEST_CASE("broken-circuit-free counts match the chromatic polynomial") {
    // chi(T^2_3) = sum_k (-1)^k b_k x^{9-k} with b_k the k-subsets of edges
    // free of broken circuits.
    Poly chi = chromatic_poly_small(9, torus_graph_edges(2, 3));
    for (int k = 0; k <= 4; ++k) {
        Rational coeff = chi.coeff(static_cast<std::size_t>(9 - k));
        Rational expect = (k % 2 ? -1 : 1) *
                          Rational(static_cast<long long>(brute_bc_free_count(2, 3, k)));
        CHECK(coeff == expect);
    }
}

TEST_CASE("broken-circuit-free counts in closed form") {
    // With 50 edges and girth forcing any broken circuit to use 3 edges,
    // the only excluded 3-subsets are the 25 unit squares minus their top.
    CHECK(brute_bc_free_count(2, 5, 0) == 1);
    CHECK(brute_bc_free_count(2, 5, 1) == 50);
    CHECK(brute_bc_free_count(2, 5, 2) == 1225);
    CHECK(brute_bc_free_count(2, 5, 3) == 19575);
    // On a cycle C_5 the last edge closes a broken circuit.
    CHECK(brute_bc_free_count(1, 5, 4) == 4);
    CHECK_THROWS_AS(brute_bc_free_count(2, 2, 1), std::invalid_argument);
}

TEST_CASE("local goodness predicts global goodness on small subsets") {
    GoodnessCounts c3 = classify_cyclefree_subsets(2, 5, 3);
    CHECK(c3.gg == 19570);
    CHECK(c3.gb == 5);
    CHECK(c3.bg == 5);
    CHECK(c3.bb == 20);
    CHECK(c3.cyclic == 0);

    GoodnessCounts c4 = classify_cyclefree_subsets(2, 5, 4);
    CHECK(c4.gb == 230);
    CHECK(c4.bg == 230);
    CHECK(c4.bb == 920);
    CHECK(c4.cyclic == 25);
    CHECK(c4.gg + c4.gb + c4.bg + c4.bb + c4.cyclic == 230300);  // C(50, 4)

    CHECK_THROWS_AS(classify_cyclefree_subsets(2, 5, 5), GuardError);
}

TEST_CASE("chromatic coefficient table") {
    ChromaticCoefficientTable t2 = chromatic_coefficients(2, 2);
    Poly n = Poly::variable();
    CHECK(t2.table.q[0] == Poly(1));
    CHECK(t2.table.q[1] == Rational(2) * n);
    CHECK(t2.table.q[2] == Rational(2) * n * n - n);

    // In one dimension every subset of distinct edges is good until the
    // cycle closes, so the table collapses to binomial coefficients.
    ChromaticCoefficientTable t1 = chromatic_coefficients(1, 3);
    CHECK(t1.table.q[2] == ratio(1, 2) * (n * n - n));
    CHECK(t1.table.q[3](Rational(6)) == Rational(20));
}

TEST_CASE("chromatic table terms match brute counts on a torus") {
    // qt_k(n^2) equals the broken-circuit-free k-subset count of T^2_n while
    // k <= n - 2; at k = n - 1 full lines minus their largest edge appear as
    // extra broken circuits, one per row and column.
    ChromaticCoefficientTable t = chromatic_coefficients(2, 3);
    for (int k = 0; k <= 3; ++k) {
        CHECK(t.table.q[k](Rational(25)) ==
              Rational(static_cast<long long>(brute_bc_free_count(2, 5, k))));
    }
    for (int k = 0; k <= 2; ++k) {
        CHECK(t.table.q[k](Rational(16)) ==
              Rational(static_cast<long long>(brute_bc_free_count(2, 4, k))));
    }
    CHECK(t.table.q[3](Rational(16)) ==
          Rational(static_cast<long long>(brute_bc_free_count(2, 4, 3))) + 8);
}
