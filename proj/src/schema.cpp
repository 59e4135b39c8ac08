#include "toric/schema.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "toric/counting.hpp"

namespace toric {

namespace {

// All permutations of 0..m-1 that only move vertices carrying equal figures.
std::vector<std::vector<int>> label_preserving_perms(const std::vector<Figure>& figs) {
    const int m = static_cast<int>(figs.size());
    std::map<Figure, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[figs[i]].push_back(i);

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    auto walk = [&](auto&& self, std::map<Figure, std::vector<int>>::iterator it) -> void {
        if (it == groups.end()) {
            perms.push_back(perm);
            return;
        }
        std::vector<int> target = it->second;
        auto next = std::next(it);
        do {
            for (std::size_t i = 0; i < target.size(); ++i) perm[it->second[i]] = target[i];
            self(self, next);
        } while (std::next_permutation(target.begin(), target.end()));
        for (int v : it->second) perm[v] = v;
    };
    walk(walk, groups.begin());
    return perms;
}

bool edges_connected(int m, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int parts = m;
    for (const auto& [a, b] : edges) {
        int ra = find(a);
        int rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --parts;
        }
    }
    return parts == 1;
}

std::vector<std::pair<int, int>> apply_perm(const std::vector<std::pair<int, int>>& edges,
                                            const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) out.push_back(std::minmax(perm[a], perm[b]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<LabeledConnectedGraph> enumerate_lcg(const Catalog& catalog, int max_weight,
                                                 const Limits& limits) {
    if (max_weight < 0) throw std::invalid_argument("max weight must be >= 0");
    if (max_weight > limits.max_sequence_weight)
        throw GuardError("labeled-graph enumeration limited to weight " +
                         std::to_string(limits.max_sequence_weight));
    Catalog c = truncate_catalog(catalog, max_weight);

    std::vector<LabeledConnectedGraph> out;
    std::vector<Figure> chosen;
    auto emit = [&](int weight) {
        // chosen is sorted: catalog figures are picked in index order and
        // repeats are adjacent, but catalog order is arbitrary, so sort.
        std::vector<Figure> figs = chosen;
        std::sort(figs.begin(), figs.end());
        const int m = static_cast<int>(figs.size());
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
        std::vector<std::vector<int>> perms = label_preserving_perms(figs);

        std::set<std::vector<std::pair<int, int>>> canonical;
        for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask & (1UL << b)) edges.push_back(pairs[b]);
            if (!edges_connected(m, edges)) continue;
            std::vector<std::pair<int, int>> best = apply_perm(edges, perms[0]);
            for (std::size_t p = 1; p < perms.size(); ++p)
                best = std::min(best, apply_perm(edges, perms[p]));
            canonical.insert(std::move(best));
        }
        for (const auto& edges : canonical)
            out.push_back(LabeledConnectedGraph{make_overlap_graph(figs, edges), weight});
    };
    auto pick = [&](auto&& self, int idx, int remaining, int k) -> void {
        if (idx == c.size()) {
            if (remaining == 0 && !chosen.empty()) emit(k);
            return;
        }
        for (int mult = 0; mult * c.weights[idx] <= remaining; ++mult) {
            for (int i = 0; i < mult; ++i) chosen.push_back(c.figures[idx]);
            self(self, idx + 1, remaining - mult * c.weights[idx], k);
            for (int i = 0; i < mult; ++i) chosen.pop_back();
        }
    };
    for (int k = 1; k <= max_weight; ++k) pick(pick, 0, k, k);

    std::sort(out.begin(), out.end(), [](const LabeledConnectedGraph& a,
                                         const LabeledConnectedGraph& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.graph < b.graph;
    });
    return out;
}

Series<Rational> connected_series(const Catalog& catalog, int max_weight, const Limits& limits) {
    Series<Rational> a(max_weight);
    for (const auto& lcg : enumerate_lcg(catalog, max_weight, limits))
        a.c[lcg.weight] += a_coeff(lcg.graph, limits);
    return a;
}

SequenceTable q_sequence_via_schema(const Catalog& catalog, int max_weight,
                                    const Limits& limits) {
    Series<Poly> q = series_exp_linear(connected_series(catalog, max_weight, limits));
    SequenceTable table;
    table.q = std::move(q.c);
    return table;
}

BinomialReport verify_binomial(const SequenceTable& table) {
    BinomialReport report;
    auto fail = [&](const std::string& msg) {
        report.pass = false;
        report.failures.push_back(msg);
    };
    const int K = table.max_weight();
    if (K < 0 || table.q[0] != Poly(1)) {
        fail("q_0 must be the constant 1");
        return report;
    }

    Series<Poly> sp(K);
    sp.c = table.q;
    Series<Rational> at_one = series_eval_at(sp, 1);
    for (int n = 0; n <= 2 * K; ++n) {
        Series<Rational> lhs = series_pow(at_one, static_cast<unsigned long long>(n));
        Series<Rational> rhs = series_eval_at(sp, n);
        for (int i = 0; i <= K; ++i)
            if (lhs.c[i] != rhs.c[i])
                fail("power law fails at N=" + std::to_string(n) + ", x^" + std::to_string(i) +
                     ": " + rational_str(lhs.c[i]) + " != " + rational_str(rhs.c[i]));
    }

    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            for (int n = 0; n <= K; ++n) {
                Rational lhs = table.q[n](Rational(a + b));
                Rational rhs = 0;
                for (int i = 0; i <= n; ++i)
                    rhs += table.q[i](Rational(a)) * table.q[n - i](Rational(b));
                if (lhs != rhs)
                    fail("convolution fails at a=" + std::to_string(a) + ", b=" +
                         std::to_string(b) + ", n=" + std::to_string(n));
            }
    return report;
}

}  // namespace toric
