#include "toric/selftest.hpp"

#include <functional>

#include "toric/chromatic.hpp"
#include "toric/counting.hpp"
#include "toric/schema.hpp"
#include "toric/series.hpp"

namespace toric {

namespace {

Figure h_domino() { return canonicalize(2, {{0, 0}, {1, 0}}, {{0, 1}}); }
Figure v_domino() { return canonicalize(2, {{0, 0}, {0, 1}}, {{0, 1}}); }

struct Recorder {
    CriterionResult result;

    Recorder(int id, std::string name) {
        result.id = id;
        result.name = std::move(name);
    }

    void check(const std::string& name, bool ok, const std::string& details = "") {
        result.checks.push_back(CheckRow{name, ok, details});
        if (!ok) result.pass = false;
    }

    void equal_poly(const std::string& name, const Poly& got, const Poly& want) {
        check(name, got == want, "got " + got.str() + ", want " + want.str());
    }

    void equal_count(const std::string& name, const Rational& got, const Rational& want) {
        check(name, got == want, "got " + rational_str(got) + ", want " + rational_str(want));
    }
};

Poly poly_c(std::vector<Rational> coeffs) { return Poly::from_coeffs(std::move(coeffs)); }

CriterionResult criterion_poly_vs_oracle(const Limits& limits) {
    Recorder r(1, "placement polynomials reproduce brute-force counts");

    FigureMultiset hv = make_multiset(2, {h_domino(), v_domino()});
    PlacementPolynomial f_hv = f_polynomial_torus(hv, limits);
    r.equal_poly("f{H,V} on the torus", f_hv.poly, poly_c({0, -4, 1}));
    r.check("f{H,V} threshold", f_hv.n0 == 9, "n0=" + std::to_string(f_hv.n0));
    for (int n = 9; n <= 11; ++n)
        r.equal_count("f{H,V} vs brute count at n=" + std::to_string(n),
                      f_hv.poly(Rational(n) * n), Rational(brute_count_torus(hv, n, limits)));

    FigureMultiset hh = make_multiset(2, {h_domino(), h_domino()});
    PlacementPolynomial f_hh = f_polynomial_torus(hh, limits);
    r.equal_poly("f{H,H} on the torus", f_hh.poly, poly_c({0, ratio(-3, 2), ratio(1, 2)}));
    for (int n = 9; n <= 11; ++n)
        r.equal_count("f{H,H} vs brute count at n=" + std::to_string(n),
                      f_hh.poly(Rational(n) * n), Rational(brute_count_torus(hh, n, limits)));

    FigureMultiset h = make_multiset(2, {h_domino()});
    PlacementPolynomial f_h = f_polynomial_box(h, limits);
    r.equal_poly("f{H} on the box", f_h.poly, poly_c({0, -1, 1}));
    for (int n = 2; n <= 8; ++n)
        r.equal_count("f{H} box vs brute count at n=" + std::to_string(n), f_h.poly(n),
                      Rational(brute_count_box(h, n, limits)));
    return r.result;
}

CriterionResult criterion_consistent_counts(const Limits& limits) {
    Recorder r(2, "consistent-placement counts scale as v(G) * n^d with a product law");

    OverlapGraph edge_hv = make_overlap_graph({h_domino(), v_domino()}, {{0, 1}});
    OverlapGraph edge_hh = make_overlap_graph({h_domino(), h_domino()}, {{0, 1}});
    for (int n : {5, 7, 9}) {
        Rational nn = Rational(n) * n;
        r.equal_count("edge(H,V) at n=" + std::to_string(n),
                      Rational(count_consistent_torus(edge_hv, n, limits)), 4 * nn);
        r.equal_count("edge(H,H) at n=" + std::to_string(n),
                      Rational(count_consistent_torus(edge_hh, n, limits)), 3 * nn);
    }

    OverlapGraph isolated = make_overlap_graph({h_domino(), h_domino()}, {});
    r.equal_count("two isolated vertices at n=5",
                  Rational(count_consistent_torus(isolated, 5, limits)), Rational(625));

    OverlapGraph mixed = make_overlap_graph({h_domino(), v_domino(), h_domino()}, {{0, 1}});
    Rational direct = Rational(count_consistent_torus(mixed, 7, limits));
    Rational product = 1;
    for (const auto& comp : graph_components(mixed))
        product *= Rational(count_consistent_torus(induced_subgraph(mixed, comp), 7, limits));
    r.equal_count("product law, edge(H,V) plus isolated H at n=7", direct, product);
    r.equal_count("product law value", direct, Rational(4 * 49) * 49);
    return r.result;
}

CriterionResult criterion_route_equality(const Limits& limits) {
    Recorder r(3, "multiset and schema routes build identical tables");

    Catalog dominoes = make_catalog(2, {h_domino(), v_domino()}, {1, 1});
    SequenceTable by_multisets = p_sequence_via_multisets(dominoes, 4, limits);
    SequenceTable by_schema = q_sequence_via_schema(dominoes, 4, limits);
    r.check("domino catalog, K=4", by_multisets == by_schema);

    Catalog lg = locally_good_catalog(2, 3, limits);
    SequenceTable lg_multisets = p_sequence_via_multisets(lg, 3, limits);
    SequenceTable lg_schema = q_sequence_via_schema(lg, 3, limits);
    r.check("locally good catalog d=2, K=3", lg_multisets == lg_schema);
    return r.result;
}

CriterionResult criterion_binomial_dominoes(const Limits& limits) {
    Recorder r(4, "domino sequence is binomial-type and matches oracle interpolation");

    Catalog dominoes = make_catalog(2, {h_domino(), v_domino()}, {1, 1});
    SequenceTable table = p_sequence_via_multisets(dominoes, 4, limits);
    BinomialReport rep = verify_binomial(table);
    r.check("verify_binomial, K=4", rep.pass,
            rep.failures.empty() ? "" : rep.failures.front());
    r.equal_poly("q_1", table.q[1], poly_c({0, 2}));
    r.equal_poly("q_2", table.q[2], poly_c({0, -7, 2}));

    // Independent route to q_2: brute pair counts at three sides pin the
    // quadratic by interpolation.
    std::vector<std::pair<Rational, Rational>> points;
    for (int n : {9, 10, 11}) {
        unsigned long long total = 0;
        for (const auto& s : weight_multisets(dominoes, 2, limits))
            total += brute_count_torus(s, n, limits);
        points.emplace_back(Rational(n) * n, Rational(total));
    }
    r.equal_poly("q_2 from oracle interpolation", poly_interpolate(points), table.q[2]);
    return r.result;
}

CriterionResult criterion_weighted_catalog(const Limits& limits) {
    Recorder r(5, "weighted catalog stays binomial-type");

    Catalog weighted = make_catalog(2, {h_domino(), v_domino()}, {1, 2});
    SequenceTable by_schema = q_sequence_via_schema(weighted, 4, limits);
    BinomialReport rep = verify_binomial(by_schema);
    r.check("verify_binomial, K=4", rep.pass,
            rep.failures.empty() ? "" : rep.failures.front());
    r.check("routes agree", by_schema == p_sequence_via_multisets(weighted, 4, limits));
    r.equal_poly("q_1", by_schema.q[1], poly_c({0, 1}));
    r.equal_poly("q_2", by_schema.q[2], poly_c({0, ratio(-1, 2), ratio(1, 2)}));
    return r.result;
}

CriterionResult criterion_whitney_exact(const Limits& limits) {
    Recorder r(6, "deletion-contraction chromatic polynomial matches broken-circuit counts");

    Poly chi = chromatic_poly_small(9, torus_graph_edges(2, 3), limits);
    for (int k = 0; k <= 9; ++k) {
        Rational sign = k % 2 == 0 ? 1 : -1;
        Rational want = sign * Rational(brute_bc_free_count(2, 3, k, limits));
        r.equal_count("coefficient of x^" + std::to_string(9 - k), chi.coeff(9 - k), want);
    }
    return r.result;
}

CriterionResult criterion_chromatic_table(const Limits& limits) {
    Recorder r(7, "chromatic coefficient tables match direct subset counts");

    ChromaticCoefficientTable t2 = chromatic_coefficients(2, 3, limits);
    r.equal_poly("d=2 qt_1", t2.table.q[1], poly_c({0, 2}));
    r.equal_poly("d=2 qt_2", t2.table.q[2], poly_c({0, -1, 2}));
    unsigned long long bc = brute_bc_free_count(2, 5, 3, limits);
    r.equal_count("brute count (d=2, n=5, k=3)", Rational(bc),
                  Rational(binomial(50, 3) - 25));
    r.equal_count("d=2 qt_3 at N=25", t2.table.q[3](25), Rational(bc));
    BinomialReport rep = verify_binomial(t2.table);
    r.check("d=2 table verify_binomial", rep.pass,
            rep.failures.empty() ? "" : rep.failures.front());

    ChromaticCoefficientTable t1 = chromatic_coefficients(1, 3, limits);
    for (int n = 5; n <= 9; ++n)
        for (int k = 0; k <= 3; ++k)
            r.equal_count(
                "d=1 qt_" + std::to_string(k) + " at n=" + std::to_string(n),
                t1.table.q[k](n), Rational(brute_bc_free_count(1, n, k, limits)));
    return r.result;
}

CriterionResult criterion_goodness_classification(const Limits& limits) {
    Recorder r(8, "locally bad and globally bad cycle-free subsets balance out");

    for (int k = 2; k <= 4; ++k) {
        GoodnessCounts c = classify_cyclefree_subsets(2, 5, k, limits);
        std::string tag = "k=" + std::to_string(k);
        BigInt covered = BigInt(c.gg) + c.gb + c.bg + c.bb + c.cyclic;
        r.check("counts " + tag + " cover all subsets", covered == binomial(50, k),
                "gg=" + std::to_string(c.gg) + " gb=" + std::to_string(c.gb) +
                    " bg=" + std::to_string(c.bg) + " bb=" + std::to_string(c.bb) +
                    " cyclic=" + std::to_string(c.cyclic));
        r.check("good-bad balance " + tag, c.gb == c.bg,
                "gb=" + std::to_string(c.gb) + " bg=" + std::to_string(c.bg));
    }
    return r.result;
}

CriterionResult criterion_structure(const Limits& limits) {
    Recorder r(9, "structural identities hold across every table");

    Catalog dominoes = make_catalog(2, {h_domino(), v_domino()}, {1, 1});
    Catalog weighted = make_catalog(2, {h_domino(), v_domino()}, {1, 2});
    std::vector<std::pair<std::string, SequenceTable>> tables;
    tables.emplace_back("dominoes K=4", p_sequence_via_multisets(dominoes, 4, limits));
    tables.emplace_back("weighted K=4", q_sequence_via_schema(weighted, 4, limits));
    tables.emplace_back("locally good d=2 K=3", chromatic_coefficients(2, 3, limits).table);
    tables.emplace_back("locally good d=1 K=3", chromatic_coefficients(1, 3, limits).table);

    for (const auto& [name, table] : tables) {
        r.check(name + ": q_0 = 1", table.q[0] == Poly(1));
        bool zeros = true;
        bool valued = true;
        for (int k = 1; k <= table.max_weight(); ++k) {
            if (table.q[k](0) != 0) zeros = false;
            if (!table.q[k].is_integer_valued()) valued = false;
        }
        r.check(name + ": q_k(0) = 0 for k >= 1", zeros);
        r.check(name + ": integer valued", valued);
    }

    FigureMultiset hv = make_multiset(2, {h_domino(), v_domino()});
    r.check("distinct-figure polynomial has integer coefficients",
            f_polynomial_torus(hv, limits).poly.has_integer_coeffs());

    bool multinomial = true;
    for (int k = 1; k <= 6; ++k)
        for (int n = 1; n <= 6; ++n)
            if (!multinomial_identity_check(k, n, limits)) multinomial = false;
    r.check("multinomial identity, k,n <= 6", multinomial);
    return r.result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Limits& limits) {
    std::vector<std::function<CriterionResult(const Limits&)>> criteria = {
        criterion_poly_vs_oracle,    criterion_consistent_counts,
        criterion_route_equality,    criterion_binomial_dominoes,
        criterion_weighted_catalog,  criterion_whitney_exact,
        criterion_chromatic_table,   criterion_goodness_classification,
        criterion_structure,
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            out.push_back(criteria[i](limits));
        } catch (const std::exception& e) {
            CriterionResult broke;
            broke.id = static_cast<int>(i) + 1;
            broke.name = "criterion aborted";
            broke.pass = false;
            broke.checks.push_back(CheckRow{"exception", false, e.what()});
            out.push_back(std::move(broke));
        }
    }
    return out;
}

}  // namespace toric
