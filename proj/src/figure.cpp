#include "toric/figure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace toric {

Point add(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Point sub(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

namespace {

bool unit_apart(const Point& a, const Point& b) {
    int diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - b[i];
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        ++diff;
    }
    return diff == 1;
}

}  // namespace

Figure canonicalize(int dim, std::vector<Point> vertices, std::vector<std::pair<int, int>> edges) {
    if (dim < 1) throw std::invalid_argument("figure dimension must be >= 1");
    if (vertices.empty()) throw std::invalid_argument("figure needs at least one vertex");
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("vertex arity does not match figure dimension");

    Point shift = vertices[0];
    for (const auto& v : vertices)
        for (int i = 0; i < dim; ++i) shift[i] = std::min(shift[i], v[i]);
    for (auto& v : vertices) v = sub(v, shift);

    const int n = static_cast<int>(vertices.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertices[a] < vertices[b]; });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<Point> sorted;
    sorted.reserve(n);
    for (int i = 0; i < n; ++i) sorted.push_back(vertices[order[i]]);
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) throw std::invalid_argument("duplicate figure vertex");

    for (auto& e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw std::invalid_argument("edge index out of range");
        if (e.first == e.second) throw std::invalid_argument("edge endpoints must differ");
        e = {rank[e.first], rank[e.second]};
        if (e.first > e.second) std::swap(e.first, e.second);
        if (!unit_apart(sorted[e.first], sorted[e.second]))
            throw std::invalid_argument("figure edge is not a unit lattice edge");
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i] == edges[i + 1]) throw std::invalid_argument("duplicate figure edge");

    Figure f;
    f.dim = dim;
    f.vertices = std::move(sorted);
    f.edges = std::move(edges);
    return f;
}

Figure figure_from_cells(int dim, std::vector<Point> cells) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (unit_apart(cells[i], cells[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return canonicalize(dim, std::move(cells), std::move(edges));
}

Extent extent(const Figure& f) {
    Extent e;
    e.span.assign(f.dim, 0);
    for (const auto& v : f.vertices)
        for (int i = 0; i < f.dim; ++i) e.span[i] = std::max(e.span[i], v[i]);
    e.girth = *std::max_element(e.span.begin(), e.span.end());
    return e;
}

bool is_connected(const Figure& f) {
    const int n = f.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : f.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == n;
}

bool overlaps(const Figure& f, const Point& tf, const Figure& g, const Point& tg,
              std::optional<int> modulus) {
    if (f.dim != g.dim) throw std::invalid_argument("figures live in different dimensions");
    auto place = [&](const Figure& fig, const Point& t) {
        std::set<Point> out;
        for (const auto& v : fig.vertices) {
            Point p = add(v, t);
            if (modulus) {
                int n = *modulus;
                for (auto& x : p) x = ((x % n) + n) % n;
            }
            out.insert(std::move(p));
        }
        return out;
    };
    std::set<Point> a = place(f, tf);
    for (const auto& p : place(g, tg))
        if (a.count(p)) return true;
    return false;
}

std::vector<Figure> enumerate_connected_edge_figures(int dim, int k, const Limits& limits) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (k < 1) throw std::invalid_argument("edge count must be >= 1");
    if (k > limits.max_edge_figure_edges)
        throw GuardError("edge-figure enumeration limited to k <= " +
                         std::to_string(limits.max_edge_figure_edges) +
                         " (relax the limits to go further)");

    // Grow by one edge at a time: every connected (j+1)-edge figure arises
    // from a connected j-edge figure by attaching an incident unit edge
    // (remove a cycle edge if one exists, otherwise a leaf edge of the tree).
    std::set<Figure> level;
    for (int d = 0; d < dim; ++d) {
        Point a(dim, 0);
        Point b(dim, 0);
        b[d] = 1;
        level.insert(canonicalize(dim, {a, b}, {{0, 1}}));
    }
    for (int j = 1; j < k; ++j) {
        std::set<Figure> next;
        for (const Figure& f : level) {
            std::set<std::pair<Point, Point>> present;
            for (const auto& e : f.edges)
                present.insert({f.vertices[e.first], f.vertices[e.second]});
            for (const auto& v : f.vertices) {
                for (int d = 0; d < dim; ++d) {
                    for (int sign : {-1, 1}) {
                        Point w = v;
                        w[d] += sign;
                        std::pair<Point, Point> key = std::minmax(v, w);
                        if (present.count(key)) continue;
                        std::vector<Point> verts = f.vertices;
                        std::vector<std::pair<int, int>> edges = f.edges;
                        int vi = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                                  verts.begin());
                        auto wit = std::lower_bound(verts.begin(), verts.end(), w);
                        int wi;
                        if (wit != verts.end() && *wit == w) {
                            wi = static_cast<int>(wit - verts.begin());
                        } else {
                            wi = static_cast<int>(verts.size());
                            verts.push_back(w);
                        }
                        edges.emplace_back(vi, wi);
                        next.insert(canonicalize(dim, std::move(verts), std::move(edges)));
                    }
                }
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

}  // namespace toric
