#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "toric/errors.hpp"
#include "toric/figure.hpp"

using namespace toric;

namespace {

Figure horizontal() { return figure_from_cells(2, {{0, 0}, {1, 0}}); }
Figure vertical() { return figure_from_cells(2, {{0, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("canonicalize translates and sorts") {
    Figure f = canonicalize(2, {{5, 7}, {4, 7}}, {{0, 1}});
    CHECK(f.vertices == std::vector<Point>{{0, 0}, {1, 0}});
    CHECK(f.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(f == horizontal());

    // Edge indices follow their vertices through the sort.
    Figure g = canonicalize(2, {{1, 0}, {0, 0}}, {{1, 0}});
    CHECK(g == f);
}

TEST_CASE("canonicalize validates the description") {
    CHECK_THROWS_AS(canonicalize(0, {{0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {{0, 0, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {{0, 0}, {0, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {{0, 0}, {1, 0}}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {{0, 0}, {1, 0}}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {{0, 0}, {1, 1}}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("figure_from_cells derives unit adjacency") {
    Figure square = figure_from_cells(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(square.size() == 4);
    CHECK(square.edge_count() == 4);

    Figure diag = figure_from_cells(2, {{0, 0}, {1, 1}});
    CHECK(diag.edge_count() == 0);
    CHECK(!is_connected(diag));
}

TEST_CASE("extent spans per coordinate") {
    Figure l = figure_from_cells(2, {{0, 0}, {1, 0}, {1, 1}, {1, 2}});
    Extent e = extent(l);
    CHECK(e.span == std::vector<int>{1, 2});
    CHECK(e.girth == 2);
    CHECK(extent(horizontal()).girth == 1);
}

TEST_CASE("connectivity uses the declared edges") {
    CHECK(is_connected(horizontal()));
    // Adjacent cells but no edge between them.
    Figure f = canonicalize(2, {{0, 0}, {1, 0}}, {});
    CHECK(!is_connected(f));
    Figure one = canonicalize(2, {{3, 3}}, {});
    CHECK(is_connected(one));
}

TEST_CASE("overlap of placed figures") {
    Figure h = horizontal();
    Figure v = vertical();
    CHECK(overlaps(h, {0, 0}, h, {1, 0}));
    CHECK(!overlaps(h, {0, 0}, h, {2, 0}));
    CHECK(overlaps(h, {0, 0}, v, {1, -1}));
    CHECK(!overlaps(h, {0, 0}, v, {2, 0}));

    // Wraparound joins the two ends of a length-5 row.
    CHECK(!overlaps(h, {0, 0}, h, {4, 0}));
    CHECK(overlaps(h, {0, 0}, h, {4, 0}, 5));
    CHECK(overlaps(h, {0, 0}, h, {-1, 0}));

    CHECK_THROWS_AS(overlaps(h, {0, 0}, figure_from_cells(1, {{0}}), {0}),
                    std::invalid_argument);
}

TEST_CASE("overlap on a wide torus matches the plane") {
    Figure h = horizontal();
    Figure v = vertical();
    for (int dx = -3; dx <= 3; ++dx)
        for (int dy = -3; dy <= 3; ++dy) {
            CHECK(overlaps(h, {0, 0}, v, {dx, dy}) == overlaps(h, {0, 0}, v, {dx, dy}, 9));
        }
}

TEST_CASE("connected edge figure counts") {
    CHECK(enumerate_connected_edge_figures(1, 1).size() == 1);
    CHECK(enumerate_connected_edge_figures(1, 4).size() == 1);
    const int expected[] = {2, 6, 22, 88};
    for (int k = 1; k <= 4; ++k) {
        auto figs = enumerate_connected_edge_figures(2, k);
        CHECK(figs.size() == static_cast<std::size_t>(expected[k - 1]));
        // Canonical, sorted, unique.
        CHECK(std::is_sorted(figs.begin(), figs.end()));
        CHECK(std::adjacent_find(figs.begin(), figs.end()) == figs.end());
        for (const auto& f : figs) {
            CHECK(is_connected(f));
            CHECK(f.edge_count() == k);
        }
    }
}

TEST_CASE("edge figures are symmetric under swapping the axes") {
    auto figs = enumerate_connected_edge_figures(2, 3);
    std::set<Figure> transposed;
    for (const auto& f : figs) {
        std::vector<Point> verts;
        for (const auto& p : f.vertices) verts.push_back({p[1], p[0]});
        transposed.insert(canonicalize(2, std::move(verts), f.edges));
    }
    CHECK(transposed == std::set<Figure>(figs.begin(), figs.end()));
}

TEST_CASE("edge figure guard") {
    CHECK_THROWS_AS(enumerate_connected_edge_figures(2, 7), GuardError);
    CHECK_THROWS_AS(enumerate_connected_edge_figures(2, 0), std::invalid_argument);
}
