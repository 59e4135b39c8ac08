#include "toric/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace toric {

FigureMultiset make_multiset(int dim, const std::vector<Figure>& figures) {
    for (const auto& f : figures)
        if (f.dim != dim) throw std::invalid_argument("multiset mixes figure dimensions");
    std::vector<Figure> sorted = figures;
    std::sort(sorted.begin(), sorted.end());
    FigureMultiset s;
    s.dim = dim;
    for (const auto& f : sorted) {
        if (!s.entries.empty() && s.entries.back().first == f)
            ++s.entries.back().second;
        else
            s.entries.emplace_back(f, 1);
    }
    return s;
}

Catalog make_catalog(int dim, std::vector<Figure> figures, std::vector<int> weights) {
    if (dim < 1) throw std::invalid_argument("catalog dimension must be >= 1");
    if (figures.size() != weights.size())
        throw std::invalid_argument("catalog needs one weight per figure");
    for (const auto& f : figures) {
        if (f.dim != dim) throw std::invalid_argument("catalog mixes figure dimensions");
        if (!is_connected(f)) throw std::invalid_argument("catalog figures must be connected");
    }
    for (int w : weights)
        if (w < 1) throw std::invalid_argument("catalog weights must be positive");
    std::set<Figure> seen(figures.begin(), figures.end());
    if (seen.size() != figures.size())
        throw std::invalid_argument("catalog figures must be distinct");
    return Catalog{dim, std::move(figures), std::move(weights)};
}

Catalog truncate_catalog(const Catalog& c, int max_weight) {
    Catalog out;
    out.dim = c.dim;
    for (int i = 0; i < c.size(); ++i) {
        if (c.weights[i] > max_weight) continue;
        out.figures.push_back(c.figures[i]);
        out.weights.push_back(c.weights[i]);
    }
    return out;
}

namespace {

int ipow(int base, int exp) {
    int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

struct Budget {
    unsigned long long used = 0;
    unsigned long long cap;

    explicit Budget(unsigned long long c) : cap(c) {}
    void spend() {
        if (++used > cap) throw BudgetError("brute-force enumeration exceeded the iteration budget");
    }
};

// Occupancy-based backtracking over placements. Identical adjacent figures
// take non-decreasing offset indices so each multiset is visited once; equal
// offsets collide on occupancy anyway.
struct BruteCounter {
    int dim;
    int n;
    bool torus;
    std::vector<Figure> figs;
    std::vector<char> same_as_prev;
    std::vector<std::vector<std::vector<int>>> cells;  // per figure, per offset, cell codes
    std::vector<char> occupied;
    Budget budget;
    unsigned long long count = 0;

    BruteCounter(const FigureMultiset& s, int side, bool wrap, const Limits& limits)
        : dim(s.dim), n(side), torus(wrap), budget(limits.oracle_budget) {
        if (n < 1) throw std::invalid_argument("side length must be >= 1");
        for (const auto& [fig, c] : s.entries)
            for (int i = 0; i < c; ++i) figs.push_back(fig);
        same_as_prev.assign(figs.size(), 0);
        for (std::size_t i = 1; i < figs.size(); ++i)
            same_as_prev[i] = figs[i] == figs[i - 1];
        occupied.assign(ipow(n, dim), 0);
        cells.resize(figs.size());
        for (std::size_t f = 0; f < figs.size(); ++f) cells[f] = placements(figs[f]);
    }

    std::vector<std::vector<int>> placements(const Figure& fig) {
        std::vector<std::vector<int>> out;
        Extent e = extent(fig);
        std::vector<int> hi(dim);
        for (int i = 0; i < dim; ++i) {
            hi[i] = torus ? n - 1 : n - 1 - e.span[i];
            if (hi[i] < 0) return out;  // does not fit anywhere
        }
        Point t(dim, 0);
        while (true) {
            std::vector<int> codes;
            codes.reserve(fig.vertices.size());
            for (const auto& v : fig.vertices) {
                int code = 0;
                for (int i = 0; i < dim; ++i) {
                    int x = v[i] + t[i];
                    if (torus) x = ((x % n) + n) % n;
                    code = code * n + x;
                }
                codes.push_back(code);
            }
            std::sort(codes.begin(), codes.end());
            codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
            out.push_back(std::move(codes));
            int i = dim - 1;
            while (i >= 0 && t[i] == hi[i]) t[i--] = 0;
            if (i < 0) break;
            ++t[i];
        }
        return out;
    }

    void run(std::size_t f, std::size_t min_offset) {
        if (f == figs.size()) {
            ++count;
            return;
        }
        std::size_t start = same_as_prev[f] ? min_offset : 0;
        for (std::size_t o = start; o < cells[f].size(); ++o) {
            budget.spend();
            bool free = true;
            for (int code : cells[f][o])
                if (occupied[code]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int code : cells[f][o]) occupied[code] = 1;
            run(f + 1, o);
            for (int code : cells[f][o]) occupied[code] = 0;
        }
    }
};

}  // namespace

unsigned long long brute_count_torus(const FigureMultiset& s, int n, const Limits& limits) {
    BruteCounter counter(s, n, true, limits);
    counter.run(0, 0);
    return counter.count;
}

unsigned long long brute_count_box(const FigureMultiset& s, int n, const Limits& limits) {
    BruteCounter counter(s, n, false, limits);
    counter.run(0, 0);
    return counter.count;
}

unsigned long long count_consistent_torus(const OverlapGraph& g, int n, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("side length must be >= 1");
    const int m = g.size();
    const int dim = g.figures[0].dim;
    const int cellcount = ipow(n, dim);
    std::vector<std::vector<int>> earlier(m);  // edges to already-assigned vertices
    for (const auto& e : g.edges) earlier[e.second].push_back(e.first);

    std::vector<Point> offsets(m, Point(dim, 0));
    Budget budget(limits.oracle_budget);
    unsigned long long count = 0;
    auto decode = [&](int idx) {
        Point p(dim);
        for (int i = dim - 1; i >= 0; --i) {
            p[i] = idx % n;
            idx /= n;
        }
        return p;
    };
    auto walk = [&](auto&& self, int v) -> void {
        if (v == m) {
            ++count;
            return;
        }
        for (int idx = 0; idx < cellcount; ++idx) {
            budget.spend();
            offsets[v] = decode(idx);
            bool ok = true;
            for (int u : earlier[v])
                if (!overlaps(g.figures[u], offsets[u], g.figures[v], offsets[v], n)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
    };
    walk(walk, 0);
    return count;
}

namespace {

std::vector<Figure> expand(const FigureMultiset& s) {
    std::vector<Figure> figs;
    for (const auto& [fig, c] : s.entries)
        for (int i = 0; i < c; ++i) figs.push_back(fig);
    return figs;
}

BigInt repetition_factor(const FigureMultiset& s) {
    BigInt denom = 1;
    for (const auto& [fig, c] : s.entries) denom *= factorial(c);
    return denom;
}

void check_integrality(const FigureMultiset& s, const Poly& p) {
    if (!p.is_integer_valued())
        throw InternalError("placement polynomial is not integer valued");
    bool distinct = true;
    for (const auto& [fig, c] : s.entries)
        if (c > 1) distinct = false;
    if (distinct && !p.has_integer_coeffs())
        throw InternalError("placement polynomial of distinct figures has a fractional coefficient");
}

// Shared inclusion-exclusion skeleton: sum over subsets of overlap demands,
// with a caller-supplied polynomial per connected component.
template <typename ComponentPoly>
Poly overlap_inclusion_exclusion(const std::vector<Figure>& figs, const Limits& limits,
                                 ComponentPoly&& component_poly) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < figs.size(); ++i)
        for (std::size_t j = i + 1; j < figs.size(); ++j)
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    std::map<OverlapGraph, Poly> memo;
    Poly total;
    for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (1UL << b)) edges.push_back(pairs[b]);
        bool odd = edges.size() % 2 == 1;
        OverlapGraph g = make_overlap_graph(figs, std::move(edges));
        Poly term = 1;
        for (const auto& comp : graph_components(g)) {
            OverlapGraph sub = induced_subgraph(g, comp);
            auto it = memo.find(sub);
            if (it == memo.end()) it = memo.emplace(sub, component_poly(sub, limits)).first;
            term *= it->second;
        }
        total += odd ? -term : term;
    }
    return total;
}

}  // namespace

PlacementPolynomial f_polynomial_torus(const FigureMultiset& s, const Limits& limits) {
    const int m = s.total();
    if (m > limits.max_expanded_figures)
        throw GuardError("inclusion-exclusion limited to " +
                         std::to_string(limits.max_expanded_figures) + " figures");
    if (m == 0) return PlacementPolynomial{Poly(1), true, 1};

    std::vector<Figure> figs = expand(s);
    Poly total = overlap_inclusion_exclusion(
        figs, limits, [](const OverlapGraph& sub, const Limits& lim) {
            BigInt v = static_cast<long long>(enumerate_configurations(sub, SpanningTree::bfs, lim).size());
            return Poly::from_coeffs({Rational(0), Rational(v)});
        });

    Poly result = ratio(1, repetition_factor(s)) * total;
    check_integrality(s, result);

    long long n0 = 1;
    for (const auto& f : figs) n0 += 2 * (extent(f).girth + 1);
    return PlacementPolynomial{result, true, n0};
}

PlacementPolynomial f_polynomial_box(const FigureMultiset& s, const Limits& limits) {
    const int m = s.total();
    if (m > limits.max_expanded_figures)
        throw GuardError("inclusion-exclusion limited to " +
                         std::to_string(limits.max_expanded_figures) + " figures");
    if (m == 0) return PlacementPolynomial{Poly(1), false, 1};

    std::vector<Figure> figs = expand(s);
    const int dim = s.dim;
    long long max_span = 0;
    Poly total = overlap_inclusion_exclusion(
        figs, limits, [&](const OverlapGraph& sub, const Limits& lim) {
            Poly comp;
            for (const auto& config : enumerate_configurations(sub, SpanningTree::bfs, lim)) {
                std::vector<int> lo(dim, 0);
                std::vector<int> hi(dim, 0);
                bool first = true;
                for (int v = 0; v < sub.size(); ++v)
                    for (const auto& p : sub.figures[v].vertices) {
                        Point cell = add(p, config[v]);
                        for (int i = 0; i < dim; ++i) {
                            if (first || cell[i] < lo[i]) lo[i] = cell[i];
                            if (first || cell[i] > hi[i]) hi[i] = cell[i];
                        }
                        first = false;
                    }
                Poly translations = 1;
                for (int i = 0; i < dim; ++i) {
                    int span = hi[i] - lo[i];
                    max_span = std::max(max_span, static_cast<long long>(span));
                    translations *= Poly::from_coeffs({Rational(-span), Rational(1)});
                }
                comp += translations;
            }
            return comp;
        });

    Poly result = ratio(1, repetition_factor(s)) * total;
    check_integrality(s, result);
    return PlacementPolynomial{result, false, max_span + 1};
}

std::vector<FigureMultiset> weight_multisets(const Catalog& catalog, int weight,
                                             const Limits& limits) {
    if (weight < 0) throw std::invalid_argument("weight must be >= 0");
    if (weight > limits.max_sequence_weight)
        throw GuardError("multiset enumeration limited to weight " +
                         std::to_string(limits.max_sequence_weight));
    Catalog c = truncate_catalog(catalog, weight);

    std::vector<FigureMultiset> out;
    std::vector<Figure> chosen;
    auto pick = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == c.size()) {
            if (remaining == 0 && !chosen.empty()) out.push_back(make_multiset(c.dim, chosen));
            return;
        }
        for (int mult = 0; mult * c.weights[idx] <= remaining; ++mult) {
            for (int i = 0; i < mult; ++i) chosen.push_back(c.figures[idx]);
            self(self, idx + 1, remaining - mult * c.weights[idx]);
            for (int i = 0; i < mult; ++i) chosen.pop_back();
        }
    };
    pick(pick, 0, weight);
    return out;
}

SequenceTable p_sequence_via_multisets(const Catalog& catalog, int max_weight,
                                       const Limits& limits) {
    if (max_weight < 0) throw std::invalid_argument("max weight must be >= 0");
    if (max_weight > limits.max_sequence_weight)
        throw GuardError("sequence assembly limited to weight " +
                         std::to_string(limits.max_sequence_weight));

    SequenceTable table;
    table.q.assign(max_weight + 1, Poly());
    table.q[0] = Poly(1);
    for (int k = 1; k <= max_weight; ++k)
        for (const auto& s : weight_multisets(catalog, k, limits))
            table.q[k] += f_polynomial_torus(s, limits).poly;
    return table;
}

}  // namespace toric
