#include "toric/overlap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace toric {

OverlapGraph make_overlap_graph(std::vector<Figure> figures,
                                std::vector<std::pair<int, int>> edges) {
    if (figures.empty()) throw std::invalid_argument("overlap graph needs at least one vertex");
    const int n = static_cast<int>(figures.size());
    for (const auto& f : figures)
        if (f.dim != figures[0].dim)
            throw std::invalid_argument("overlap graph mixes figure dimensions");
    for (auto& e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw std::invalid_argument("overlap edge index out of range");
        if (e.first == e.second) throw std::invalid_argument("overlap graph forbids loops");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OverlapGraph{std::move(figures), std::move(edges)};
}

std::vector<std::vector<int>> graph_components(const OverlapGraph& g) {
    const int n = g.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : g.edges) parent[find(e.first)] = find(e.second);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

bool graph_connected(const OverlapGraph& g) { return graph_components(g).size() == 1; }

OverlapGraph induced_subgraph(const OverlapGraph& g, const std::vector<int>& vertices) {
    std::map<int, int> index;
    std::vector<Figure> figures;
    for (int v : vertices) {
        index[v] = static_cast<int>(figures.size());
        figures.push_back(g.figures[v]);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges) {
        auto a = index.find(e.first);
        auto b = index.find(e.second);
        if (a != index.end() && b != index.end()) edges.emplace_back(a->second, b->second);
    }
    return make_overlap_graph(std::move(figures), std::move(edges));
}

namespace {

// Offsets delta with (f at 0) overlapping (g at delta): pairwise differences
// of the two vertex sets.
std::vector<Point> offset_candidates(const Figure& f, const Figure& g) {
    std::set<Point> out;
    for (const auto& a : f.vertices)
        for (const auto& b : g.vertices) out.insert(sub(a, b));
    return {out.begin(), out.end()};
}

struct TreeWalk {
    std::vector<std::pair<int, int>> tree_edges;      // (parent, child) in visit order
    std::vector<std::pair<int, int>> non_tree_edges;
};

TreeWalk spanning_tree(const OverlapGraph& g, SpanningTree kind) {
    const int n = g.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    TreeWalk walk;
    std::vector<char> seen(n, 0);
    std::vector<int> frontier = {0};
    seen[0] = 1;
    while (!frontier.empty()) {
        int v;
        if (kind == SpanningTree::bfs) {
            v = frontier.front();
            frontier.erase(frontier.begin());
        } else {
            v = frontier.back();
            frontier.pop_back();
        }
        for (int w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            walk.tree_edges.emplace_back(v, w);
            frontier.push_back(w);
        }
    }
    std::set<std::pair<int, int>> in_tree;
    for (auto [p, c] : walk.tree_edges) in_tree.insert(std::minmax(p, c));
    for (const auto& e : g.edges)
        if (!in_tree.count(e)) walk.non_tree_edges.push_back(e);
    return walk;
}

}  // namespace

std::vector<Configuration> enumerate_configurations(const OverlapGraph& g, SpanningTree tree,
                                                    const Limits& limits) {
    if (!graph_connected(g))
        throw std::invalid_argument("configurations finite only for connected graphs");
    const int n = g.size();
    const int dim = g.figures[0].dim;
    TreeWalk walk = spanning_tree(g, tree);

    std::vector<std::vector<Point>> candidates;
    candidates.reserve(walk.tree_edges.size());
    for (auto [p, c] : walk.tree_edges)
        candidates.push_back(offset_candidates(g.figures[p], g.figures[c]));

    std::vector<Configuration> out;
    Configuration offsets(n, Point(dim, 0));
    unsigned long long visited = 0;
    auto assign = [&](auto&& self, std::size_t level) -> void {
        if (++visited > limits.oracle_budget)
            throw BudgetError("configuration enumeration exceeded the iteration budget");
        if (level == walk.tree_edges.size()) {
            for (const auto& e : walk.non_tree_edges)
                if (!overlaps(g.figures[e.first], offsets[e.first], g.figures[e.second],
                              offsets[e.second]))
                    return;
            out.push_back(offsets);
            return;
        }
        auto [p, c] = walk.tree_edges[level];
        for (const Point& delta : candidates[level]) {
            offsets[c] = add(offsets[p], delta);
            self(self, level + 1);
        }
    };
    assign(assign, 0);
    std::sort(out.begin(), out.end());
    return out;
}

WeightedConfigCount weighted_config_sum(const OverlapGraph& g, const Limits& limits) {
    std::vector<Configuration> configs = enumerate_configurations(g, SpanningTree::bfs, limits);

    // Class key: the placements (figure, offset) sorted, translated so the
    // lexicographically smallest offset is zero. Lexicographic order is
    // translation invariant, so the key is too.
    std::set<std::vector<std::pair<Figure, Point>>> classes;
    for (const auto& config : configs) {
        std::vector<std::pair<Figure, Point>> placement;
        placement.reserve(config.size());
        for (int i = 0; i < g.size(); ++i) placement.emplace_back(g.figures[i], config[i]);
        std::sort(placement.begin(), placement.end());
        Point base = placement[0].second;
        for (const auto& [fig, off] : placement) base = std::min(base, off);
        for (auto& [fig, off] : placement) off = sub(off, base);
        std::sort(placement.begin(), placement.end());
        classes.insert(std::move(placement));
    }

    // Each class weighs (number of anchored realizations) / prod(c_i!), so
    // the total collapses to |configurations| / prod(c_i!). Kept as a sum
    // over classes only conceptually; the closed form is exact.
    BigInt repetitions = 1;
    std::map<Figure, int> multiplicity;
    for (const auto& f : g.figures) ++multiplicity[f];
    for (const auto& [fig, c] : multiplicity) repetitions *= factorial(c);

    WeightedConfigCount out;
    out.distinct = static_cast<long long>(classes.size());
    out.sum = ratio(static_cast<long long>(configs.size()), repetitions);
    return out;
}

BigInt aut_size(const OverlapGraph& g, const Limits& limits) {
    const int n = g.size();
    if (n > limits.max_graph_vertices)
        throw GuardError("automorphism search limited to " +
                         std::to_string(limits.max_graph_vertices) + " vertices");
    std::set<std::pair<int, int>> edge_set(g.edges.begin(), g.edges.end());

    // Only permutations within groups of equal figures can preserve labels.
    std::map<Figure, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[g.figures[i]].push_back(i);

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    BigInt count = 0;
    auto walk = [&](auto&& self, std::map<Figure, std::vector<int>>::iterator it) -> void {
        if (it == groups.end()) {
            for (const auto& e : g.edges)
                if (!edge_set.count(std::minmax(perm[e.first], perm[e.second]))) return;
            ++count;
            return;
        }
        std::vector<int> target = it->second;
        auto next = std::next(it);
        std::sort(target.begin(), target.end());
        do {
            for (std::size_t i = 0; i < target.size(); ++i) perm[it->second[i]] = target[i];
            self(self, next);
        } while (std::next_permutation(target.begin(), target.end()));
        for (int v : it->second) perm[v] = v;
    };
    walk(walk, groups.begin());
    return count;
}

BigInt alpha(const OverlapGraph& g, const Limits& limits) {
    BigInt numerator = 1;
    std::map<Figure, int> multiplicity;
    for (const auto& f : g.figures) ++multiplicity[f];
    for (const auto& [fig, c] : multiplicity) numerator *= factorial(c);
    Rational a = ratio(numerator, aut_size(g, limits));
    if (!is_integer(a)) throw InternalError("alpha is not an integer");
    return to_integer(a);
}

Rational a_coeff(const OverlapGraph& g, const Limits& limits) {
    Rational sign = g.edges.size() % 2 == 0 ? 1 : -1;
    return sign * Rational(alpha(g, limits)) * weighted_config_sum(g, limits).sum;
}

}  // namespace toric
