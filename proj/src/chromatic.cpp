#include "toric/chromatic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "toric/schema.hpp"

namespace toric {

std::vector<int> edge_order_key(const GridEdge& e, int dim) {
    std::vector<int> key;
    key.reserve(dim + 1);
    key.push_back(dim - 1 - e.dir);
    for (int i = 0; i < dim; ++i)
        if (i != e.dir) key.push_back(e.base[i]);
    key.push_back(e.base[e.dir]);
    return key;
}

std::strong_ordering edge_compare(const GridEdge& a, const GridEdge& b, int dim) {
    return edge_order_key(a, dim) <=> edge_order_key(b, dim);
}

namespace {

GridEdge figure_edge(const Figure& f, int i, int j) {
    const Point& a = f.vertices[i];
    const Point& b = f.vertices[j];
    for (int d = 0; d < f.dim; ++d) {
        if (a[d] + 1 == b[d]) return GridEdge{a, d};
        if (b[d] + 1 == a[d]) return GridEdge{b, d};
    }
    throw InternalError("figure edge is not a unit edge");
}

// Strictly-below under the bare natural constraints: axis-0 edges dominate
// every other direction, and among themselves are graded by the projection
// of the base onto axes 1..d-1. Everything else ties.
bool coarse_below(const GridEdge& a, const GridEdge& b, int dim) {
    if (b.dir != 0) return false;
    if (a.dir != 0) return true;
    for (int i = 1; i < dim; ++i) {
        if (a.base[i] != b.base[i]) return a.base[i] < b.base[i];
    }
    return false;
}

bool edge_below(const GridEdge& a, const GridEdge& b, int dim, NaturalOrder order) {
    if (order == NaturalOrder::coarse) return coarse_below(a, b, dim);
    return edge_compare(a, b, dim) == std::strong_ordering::less;
}

}  // namespace

bool is_locally_good(const Figure& f, NaturalOrder order) {
    if (!is_connected(f)) throw std::invalid_argument("local goodness needs a connected figure");
    const int n = f.size();
    std::vector<GridEdge> own;
    own.reserve(f.edges.size());
    for (const auto& [i, j] : f.edges) own.push_back(figure_edge(f, i, j));

    std::map<Point, int> index;
    for (int i = 0; i < n; ++i) index[f.vertices[i]] = i;

    // Candidate closing edges: unit pairs within the vertex set. The figure
    // is bad iff some candidate's endpoints are joined by strictly smaller
    // figure edges.
    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < f.dim; ++d) {
            Point w = f.vertices[i];
            ++w[d];
            auto it = index.find(w);
            if (it == index.end()) continue;
            GridEdge candidate{f.vertices[i], d};

            std::vector<std::vector<int>> adj(n);
            for (std::size_t e = 0; e < own.size(); ++e) {
                if (!edge_below(own[e], candidate, f.dim, order)) continue;
                adj[f.edges[e].first].push_back(f.edges[e].second);
                adj[f.edges[e].second].push_back(f.edges[e].first);
            }
            std::vector<char> seen(n, 0);
            std::vector<int> stack = {i};
            seen[i] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v])
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            if (seen[it->second]) return false;
        }
    }
    return true;
}

Catalog locally_good_catalog(int dim, int max_weight, const Limits& limits) {
    if (max_weight < 1) throw std::invalid_argument("catalog needs max weight >= 1");
    if (max_weight > limits.max_chromatic_weight)
        throw GuardError("locally good catalogs limited to weight " +
                         std::to_string(limits.max_chromatic_weight));
    std::vector<Figure> figures;
    std::vector<int> weights;
    for (int k = 1; k <= max_weight; ++k)
        for (const auto& f : enumerate_connected_edge_figures(dim, k, limits))
            if (is_locally_good(f)) {
                figures.push_back(f);
                weights.push_back(k);
            }
    return make_catalog(dim, std::move(figures), std::move(weights));
}

ChromaticCoefficientTable chromatic_coefficients(int dim, int max_weight, const Limits& limits) {
    Catalog catalog = locally_good_catalog(dim, max_weight, limits);
    SequenceTable by_multisets = p_sequence_via_multisets(catalog, max_weight, limits);
    SequenceTable by_schema = q_sequence_via_schema(catalog, max_weight, limits);
    if (!(by_multisets == by_schema))
        throw InternalError("chromatic coefficient routes disagree");
    return ChromaticCoefficientTable{dim, std::move(by_multisets)};
}

namespace {

int ipow_int(int base, int exp) {
    int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

struct TorusEdges {
    int dim;
    int n;
    int cells;
    std::vector<GridEdge> edges;        // sorted by natural order
    std::vector<int> level;             // coarse grade per rank, non-decreasing
    std::vector<std::pair<int, int>> ends;  // (base code, head code) per rank
    std::vector<std::vector<int>> incident;  // vertex code -> edge ranks

    TorusEdges(int d, int side) : dim(d), n(side), cells(ipow_int(side, d)) {
        if (d < 1) throw std::invalid_argument("dimension must be >= 1");
        if (side < 3) throw std::invalid_argument("torus side must be >= 3 for a simple graph");
        for (int code = 0; code < cells; ++code) {
            Point p = decode(code);
            for (int dir = 0; dir < dim; ++dir) edges.push_back(GridEdge{p, dir});
        }
        std::sort(edges.begin(), edges.end(), [&](const GridEdge& a, const GridEdge& b) {
            return edge_compare(a, b, dim) == std::strong_ordering::less;
        });
        // The strict rank refines the coarse grade, so grades ascend with
        // rank: non-axis-0 edges first at grade 0, then axis-0 edges grouped
        // by projection.
        level.resize(edges.size(), 0);
        int grade = 0;
        for (std::size_t r = 0; r < edges.size(); ++r) {
            if (edges[r].dir != 0) continue;
            if (grade == 0 || coarse_below(edges[r - 1], edges[r], dim)) ++grade;
            level[r] = grade;
        }
        ends.reserve(edges.size());
        incident.resize(cells);
        for (std::size_t r = 0; r < edges.size(); ++r) {
            Point head = edges[r].base;
            head[edges[r].dir] = (head[edges[r].dir] + 1) % n;
            int u = encode(edges[r].base);
            int v = encode(head);
            ends.emplace_back(u, v);
            incident[u].push_back(static_cast<int>(r));
            incident[v].push_back(static_cast<int>(r));
        }
    }

    Point decode(int code) const {
        Point p(dim);
        for (int i = dim - 1; i >= 0; --i) {
            p[i] = code % n;
            code /= n;
        }
        return p;
    }

    int encode(const Point& p) const {
        int code = 0;
        for (int i = 0; i < dim; ++i) code = code * n + p[i];
        return code;
    }
};

// Union-find over vertex codes, reset between subsets via the touched list.
struct ScratchUF {
    std::vector<int> parent;
    std::vector<int> touched;

    explicit ScratchUF(int size) : parent(size, -1) {}
    void reset() {
        for (int v : touched) parent[v] = -1;
        touched.clear();
    }
    int find(int v) {
        if (parent[v] == -1) {
            parent[v] = v;
            touched.push_back(v);
        }
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    // Returns false when u and v were already connected.
    bool unite(int u, int v) {
        int ru = find(u);
        int rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
        return true;
    }
};

// Grid edges with both endpoints in the support of the subset, sorted by
// rank. Ranks ascend with the natural order by construction.
std::vector<int> closing_candidates(const TorusEdges& te, const std::vector<int>& subset,
                                    std::vector<char>& in_support) {
    std::vector<int> support;
    for (int r : subset) {
        for (int v : {te.ends[r].first, te.ends[r].second})
            if (!in_support[v]) {
                in_support[v] = 1;
                support.push_back(v);
            }
    }
    std::vector<int> candidates;
    for (int v : support)
        for (int r : te.incident[v]) {
            int u = te.ends[r].first == v ? te.ends[r].second : te.ends[r].first;
            if (in_support[u]) candidates.push_back(r);
        }
    for (int v : support) in_support[v] = 0;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

// A subset contains a broken circuit iff some grid edge's endpoints are
// joined by subset edges strictly below it in the natural order. Under the
// coarse order "below" compares grades, so edges tied with the candidate
// never help close it. Both the subset and the candidates ascend by rank
// and grades ascend with rank, so one sweep serves every candidate.
bool contains_broken_circuit(const TorusEdges& te, const std::vector<int>& subset,
                             ScratchUF& uf, std::vector<char>& in_support,
                             NaturalOrder order = NaturalOrder::strict) {
    std::vector<int> candidates = closing_candidates(te, subset, in_support);
    uf.reset();
    std::size_t si = 0;
    auto below = [&](int a, int b) {
        return order == NaturalOrder::strict ? a < b : te.level[a] < te.level[b];
    };
    for (int r : candidates) {
        while (si < subset.size() && below(subset[si], r)) {
            uf.unite(te.ends[subset[si]].first, te.ends[subset[si]].second);
            ++si;
        }
        if (uf.find(te.ends[r].first) == uf.find(te.ends[r].second)) return true;
    }
    return false;
}

template <typename Visit>
void for_each_subset(int total, int k, const Limits& limits, Visit&& visit) {
    if (k < 0 || k > total) throw std::invalid_argument("subset size out of range");
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    unsigned long long used = 0;
    while (true) {
        if (++used > limits.oracle_budget)
            throw BudgetError("subset enumeration exceeded the iteration budget");
        visit(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == total - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::pair<int, int>> torus_graph_edges(int dim, int n) {
    TorusEdges te(dim, n);
    std::vector<std::pair<int, int>> out;
    out.reserve(te.ends.size());
    for (const auto& [u, v] : te.ends) out.push_back(std::minmax(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long brute_bc_free_count(int dim, int n, int k, const Limits& limits) {
    TorusEdges te(dim, n);
    ScratchUF uf(te.cells);
    std::vector<char> in_support(te.cells, 0);
    unsigned long long count = 0;
    for_each_subset(static_cast<int>(te.edges.size()), k, limits, [&](const std::vector<int>& s) {
        if (!contains_broken_circuit(te, s, uf, in_support)) ++count;
    });
    return count;
}

Poly chromatic_poly_small(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                          const Limits& limits) {
    if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (num_vertices > limits.max_dc_vertices)
        throw GuardError("deletion-contraction limited to " +
                         std::to_string(limits.max_dc_vertices) + " vertices");
    for (const auto& [a, b] : edges)
        if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices)
            throw std::invalid_argument("edge index out of range");

    using Key = std::pair<int, std::vector<std::pair<int, int>>>;
    std::map<Key, Poly> memo;

    auto rec = [&](auto&& self, int n, std::vector<std::pair<int, int>> es) -> Poly {
        // Normalize: orient, drop parallel copies, bail on loops, compact
        // labels so the memo sees a canonical description.
        for (auto& e : es) {
            if (e.first == e.second) return Poly();
            if (e.first > e.second) std::swap(e.first, e.second);
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        std::map<int, int> relabel;
        for (const auto& [a, b] : es) {
            relabel.emplace(a, 0);
            relabel.emplace(b, 0);
        }
        int next = 0;
        for (auto& [old_label, fresh] : relabel) fresh = next++;
        for (auto& e : es) e = {relabel[e.first], relabel[e.second]};
        std::sort(es.begin(), es.end());

        if (es.empty()) {
            Poly x = Poly::variable();
            Poly out = 1;
            for (int i = 0; i < n; ++i) out *= x;
            return out;
        }
        Key key{n, es};
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        auto [u, v] = es.front();
        std::vector<std::pair<int, int>> rest(es.begin() + 1, es.end());
        Poly deleted = self(self, n, rest);
        std::vector<std::pair<int, int>> merged = rest;
        for (auto& e : merged) {
            if (e.first == v) e.first = u;
            if (e.second == v) e.second = u;
        }
        Poly contracted = self(self, n - 1, std::move(merged));
        Poly out = deleted - contracted;
        memo.emplace(std::move(key), out);
        return out;
    };
    return rec(rec, num_vertices, edges);
}

GoodnessCounts classify_cyclefree_subsets(int dim, int n, int k, const Limits& limits) {
    if (k >= n)
        throw GuardError("component lift requires subset size below the torus side");
    TorusEdges te(dim, n);
    ScratchUF uf(te.cells);
    std::vector<char> in_support(te.cells, 0);
    std::map<Figure, bool> good_memo;

    GoodnessCounts out;
    for_each_subset(static_cast<int>(te.edges.size()), k, limits, [&](const std::vector<int>& s) {
        uf.reset();
        bool cyclic = false;
        for (int r : s)
            if (!uf.unite(te.ends[r].first, te.ends[r].second)) {
                cyclic = true;
                break;
            }
        if (cyclic) {
            ++out.cyclic;
            return;
        }

        bool globally_good = !contains_broken_circuit(te, s, uf, in_support, NaturalOrder::coarse);

        // Lift each component to the infinite grid; cycle-freeness and
        // k < n make the lift a faithful unit-edge tree.
        bool locally_good = true;
        std::map<int, Point> lifted;
        std::map<int, std::vector<std::pair<int, int>>> around;  // vertex -> (edge rank, other end)
        for (int r : s) {
            around[te.ends[r].first].emplace_back(r, te.ends[r].second);
            around[te.ends[r].second].emplace_back(r, te.ends[r].first);
        }
        std::set<int> todo;
        for (const auto& [v, inc] : around) todo.insert(v);
        while (!todo.empty() && locally_good) {
            int root = *todo.begin();
            std::vector<int> comp = {root};
            std::vector<std::pair<int, int>> comp_edges;
            lifted[root] = te.decode(root);
            todo.erase(root);
            for (std::size_t head = 0; head < comp.size(); ++head) {
                int v = comp[head];
                for (const auto& [r, u] : around[v]) {
                    if (!todo.count(u)) continue;
                    Point step(dim, 0);
                    step[te.edges[r].dir] = 1;
                    lifted[u] = te.ends[r].first == v ? add(lifted[v], step)
                                                      : sub(lifted[v], step);
                    todo.erase(u);
                    comp.push_back(u);
                }
            }
            std::map<int, int> local;
            std::vector<Point> verts;
            for (int v : comp) {
                local[v] = static_cast<int>(verts.size());
                verts.push_back(lifted[v]);
            }
            for (int v : comp)
                for (const auto& [r, u] : around[v])
                    if (te.ends[r].first == v) comp_edges.emplace_back(local[v], local[u]);
            Figure f = canonicalize(dim, std::move(verts), std::move(comp_edges));
            auto it = good_memo.find(f);
            if (it == good_memo.end())
                it = good_memo.emplace(f, is_locally_good(f, NaturalOrder::coarse)).first;
            if (!it->second) locally_good = false;
        }

        if (locally_good && globally_good)
            ++out.gg;
        else if (locally_good)
            ++out.gb;
        else if (globally_good)
            ++out.bg;
        else
            ++out.bb;
    });
    return out;
}

}  // namespace toric
