#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Lattice point; length equals the ambient dimension.
using Point = std::vector<int>;

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);

// Per-dimension coordinate spans of a vertex set and their maximum.
struct Extent {
    std::vector<int> span;
    int girth = 0;
};

// Finite set of lattice vertices plus unit edges, stored in its canonical
// translate: every per-coordinate minimum is 0, vertices sorted, edges as
// index pairs (i < j) into the vertex list, sorted.
struct Figure {
    int dim = 0;
    std::vector<Point> vertices;
    std::vector<std::pair<int, int>> edges;

    auto operator<=>(const Figure&) const = default;
    int size() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Validates (unit edges, no duplicates, matching dimensions) and translates
// to the canonical position. Edge indices refer to the vertex list as given;
// they are remapped when the vertices are sorted.
Figure canonicalize(int dim, std::vector<Point> vertices, std::vector<std::pair<int, int>> edges);

// Figure whose edges are all unit-neighbor pairs among the cells.
Figure figure_from_cells(int dim, std::vector<Point> cells);

Extent extent(const Figure& f);

// Connectivity under the figure's own edge set.
bool is_connected(const Figure& f);

// Whether the placed vertex sets f+tf and g+tg intersect; coordinates are
// reduced mod n when a modulus is given.
bool overlaps(const Figure& f, const Point& tf, const Figure& g, const Point& tg,
              std::optional<int> modulus = std::nullopt);

// All connected figures with exactly k unit edges and no isolated vertices,
// up to translation, in canonical order.
std::vector<Figure> enumerate_connected_edge_figures(int dim, int k, const Limits& limits = {});

}  // namespace toric
