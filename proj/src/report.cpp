#include "toric/report.hpp"

#include "toric/chromatic.hpp"
#include "toric/counting.hpp"
#include "toric/schema.hpp"
#include "toric/selftest.hpp"

namespace toric {

namespace {

using nlohmann::json;

json check_row(const std::string& name, const std::string& status,
               const std::string& details) {
    return json{{"name", name}, {"status", status}, {"details", details}};
}

void add_check(json& report, const std::string& name, bool pass, const std::string& details) {
    report["checks"].push_back(check_row(name, pass ? "pass" : "fail", details));
    if (!pass) report["ok"] = false;
}

void add_skip(json& report, const std::string& name, const std::string& details) {
    report["checks"].push_back(check_row(name, "skip", details));
}

json table_json(const SequenceTable& table, const std::string& var) {
    json polys = json::array();
    json pretty = json::array();
    for (const auto& q : table.q) {
        polys.push_back(poly_to_json(q));
        pretty.push_back(q.str(var));
    }
    return json{{"polynomials", polys}, {"pretty", pretty}};
}

Rational eval_torus(const Poly& p, int dim, int n) {
    Rational big_n = 1;
    for (int i = 0; i < dim; ++i) big_n *= n;
    return p(big_n);
}

}  // namespace

json run_poly_report(const FigureSet& fs, const RunOptions& opts) {
    Limits limits = opts.limits();
    FigureMultiset s = to_multiset(fs);
    PlacementPolynomial f =
        opts.box ? f_polynomial_box(s, limits) : f_polynomial_torus(s, limits);

    json report;
    report["command"] = "poly";
    report["dim"] = fs.dim;
    report["variable"] = opts.box ? "n" : "N=n^" + std::to_string(fs.dim);
    report["n0"] = f.n0;
    report["polynomials"] = json::array({poly_to_json(f.poly)});
    report["pretty"] = json::array({f.poly.str(opts.box ? "n" : "N")});
    report["checks"] = json::array();
    report["ok"] = true;

    for (int n : opts.verify_n) {
        std::string name = "brute count at n=" + std::to_string(n);
        if (n < f.n0) {
            add_skip(report, name, "below threshold n0=" + std::to_string(f.n0));
            continue;
        }
        Rational predicted = opts.box ? f.poly(n) : eval_torus(f.poly, fs.dim, n);
        Rational counted = opts.box ? Rational(brute_count_box(s, n, limits))
                                    : Rational(brute_count_torus(s, n, limits));
        add_check(report, name, predicted == counted,
                  "predicted " + rational_str(predicted) + ", counted " +
                      rational_str(counted));
    }
    return report;
}

json run_sequence_report(const FigureSet& fs, const RunOptions& opts) {
    Limits limits = opts.limits();
    Catalog catalog = to_catalog(fs);
    const int K = opts.max_weight;
    SequenceTable by_multisets = p_sequence_via_multisets(catalog, K, limits);
    SequenceTable by_schema = q_sequence_via_schema(catalog, K, limits);

    json report = table_json(by_multisets, "N");
    report["command"] = "sequence";
    report["dim"] = fs.dim;
    report["variable"] = "N=n^" + std::to_string(fs.dim);
    report["max_weight"] = K;
    report["polynomials_schema"] = table_json(by_schema, "N")["polynomials"];
    report["checks"] = json::array();
    report["ok"] = true;

    add_check(report, "route agreement", by_multisets == by_schema,
              "multiset and schema assemblies must coincide");
    BinomialReport bin = verify_binomial(by_multisets);
    add_check(report, "binomial verification", bin.pass,
              bin.pass ? "power and convolution laws hold"
                       : bin.failures.front() + " (+" +
                             std::to_string(bin.failures.size() - 1) + " more)");

    for (int n : opts.verify_n) {
        for (int k = 1; k <= K; ++k) {
            unsigned long long total = 0;
            for (const auto& s : weight_multisets(catalog, k, limits))
                total += brute_count_torus(s, n, limits);
            add_check(report,
                      "brute q_" + std::to_string(k) + " at n=" + std::to_string(n),
                      eval_torus(by_multisets.q[k], fs.dim, n) == Rational(total),
                      "counted " + std::to_string(total));
        }
    }
    return report;
}

json run_chromatic_report(int dim, const RunOptions& opts) {
    Limits limits = opts.limits();
    const int K = opts.max_weight;
    Catalog catalog = locally_good_catalog(dim, K, limits);
    SequenceTable by_multisets = p_sequence_via_multisets(catalog, K, limits);
    SequenceTable by_schema = q_sequence_via_schema(catalog, K, limits);

    json report = table_json(by_multisets, "N");
    report["command"] = "chromatic";
    report["dim"] = dim;
    report["variable"] = "N=n^" + std::to_string(dim);
    report["max_weight"] = K;
    report["catalog_size"] = catalog.size();
    report["checks"] = json::array();
    report["ok"] = true;

    add_check(report, "route agreement", by_multisets == by_schema,
              "multiset and schema assemblies must coincide");
    BinomialReport bin = verify_binomial(by_multisets);
    add_check(report, "binomial verification", bin.pass,
              bin.pass ? "power and convolution laws hold" : bin.failures.front());

    if (!opts.verify_n.empty() && dim > 2)
        throw GuardError("broken-circuit oracles are limited to dim <= 2");
    for (int n : opts.verify_n) {
        for (int k = 0; k <= K; ++k) {
            std::string name =
                "brute qt_" + std::to_string(k) + " at n=" + std::to_string(n);
            // At k = n - 1 a full line minus its largest edge is already a
            // broken circuit, so the table is exact only for k <= n - 2.
            if (k + 2 > n) {
                add_skip(report, name, "needs k <= n-2");
                continue;
            }
            unsigned long long counted = brute_bc_free_count(dim, n, k, limits);
            add_check(report, name,
                      eval_torus(by_multisets.q[k], dim, n) == Rational(counted),
                      "counted " + std::to_string(counted));
        }
    }
    return report;
}

json run_selftest_report(const RunOptions& opts) {
    json report;
    report["command"] = "selftest";
    report["checks"] = json::array();
    report["ok"] = true;

    int passed = 0;
    std::vector<CriterionResult> results = run_acceptance(opts.limits());
    for (const auto& c : results) {
        std::string details;
        for (const auto& row : c.checks)
            if (!row.pass) {
                details = row.name + ": " + row.details;
                break;
            }
        if (c.pass) {
            ++passed;
            details = std::to_string(c.checks.size()) + " checks";
        }
        report["checks"].push_back(check_row(
            "criterion " + std::to_string(c.id) + ": " + c.name,
            c.pass ? "pass" : "fail", details));
        if (!c.pass) report["ok"] = false;
    }
    report["scorecard"] =
        std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed";
    return report;
}

}  // namespace toric
