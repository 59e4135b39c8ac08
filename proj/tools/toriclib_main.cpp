#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/toric.h"

namespace {

struct Flags {
    std::string input;
    int dim = 0;
    int max_weight = 2;
    bool box = false;
    std::vector<int> verify_n;
    std::string format = "table";
    bool allow_large = false;
};

int exit_code(toric_status status, const toric_report* report) {
    switch (status) {
        case TORIC_OK:
            return report && !toric_report_ok(report) ? 1 : 0;
        case TORIC_ERR_PARSE:
            return 2;
        case TORIC_ERR_GUARD:
        case TORIC_ERR_BUDGET:
            return 3;
        default:
            return 4;
    }
}

void render_table(const nlohmann::json& doc) {
    const std::string command = doc.value("command", "");
    std::cout << "command: " << command << "\n";
    if (doc.contains("dim")) std::cout << "dim: " << doc["dim"].get<int>() << "\n";
    if (doc.contains("variable"))
        std::cout << "variable: " << doc["variable"].get<std::string>() << "\n";
    if (doc.contains("catalog_size"))
        std::cout << "catalog size: " << doc["catalog_size"].get<int>() << "\n";

    if (doc.contains("pretty")) {
        const auto& pretty = doc["pretty"];
        if (command == "poly") {
            std::cout << "f = " << pretty[0].get<std::string>() << "\n";
            std::cout << "exact for n >= " << doc["n0"].get<long long>() << "\n";
        } else {
            const char* stem = command == "chromatic" ? "qt_" : "q_";
            for (std::size_t k = 0; k < pretty.size(); ++k)
                std::cout << stem << k << " = " << pretty[k].get<std::string>() << "\n";
        }
    }

    for (const auto& row : doc.value("checks", nlohmann::json::array())) {
        std::cout << "check [" << row["status"].get<std::string>() << "] "
                  << row["name"].get<std::string>();
        std::string details = row.value("details", "");
        if (!details.empty()) std::cout << ": " << details;
        std::cout << "\n";
    }
    if (doc.contains("scorecard"))
        std::cout << "scorecard: " << doc["scorecard"].get<std::string>() << "\n";
    std::cout << "RESULT: " << (doc.value("ok", false) ? "PASS" : "FAIL") << "\n";
}

int finish(toric_status status, toric_report* report, const std::string& format) {
    if (status != TORIC_OK) {
        std::cerr << "error: " << toric_last_error() << "\n";
        return exit_code(status, nullptr);
    }
    if (format == "json")
        std::cout << toric_report_json(report) << "\n";
    else
        render_table(nlohmann::json::parse(toric_report_json(report)));
    int code = exit_code(TORIC_OK, report);
    toric_report_free(report);
    return code;
}

toric_options make_options(const Flags& flags) {
    toric_options opts;
    toric_options_init(&opts);
    opts.box = flags.box ? 1 : 0;
    opts.max_weight = flags.max_weight;
    opts.allow_large = flags.allow_large ? 1 : 0;
    opts.verify_n = flags.verify_n.data();
    opts.verify_n_count = static_cast<int>(flags.verify_n.size());
    return opts;
}

int load_input(const Flags& flags, toric_figure_set** fs) {
    toric_status status = toric_figure_set_load(flags.input.c_str(), fs);
    if (status != TORIC_OK) {
        std::cerr << "error: " << toric_last_error() << "\n";
        return exit_code(status, nullptr);
    }
    if (flags.dim != 0 && toric_figure_set_dim(*fs) != flags.dim) {
        std::cerr << "error: input has dim " << toric_figure_set_dim(*fs)
                  << ", but --dim " << flags.dim << " was requested\n";
        toric_figure_set_free(*fs);
        return 2;
    }
    return -1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"placement-count polynomials and chromatic coefficients for figures "
                 "on toroidal grids"};
    app.require_subcommand(1);

    Flags flags;
    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("--input", flags.input,
                            "figure-set JSON file, or the name of a bundled catalog")
                ->required();
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
        cmd->add_flag("--allow-large", flags.allow_large,
                      "lift the weight caps and widen the iteration budget");
        cmd->add_option("--verify-n", flags.verify_n,
                        "side lengths for brute-force verification, comma separated")
            ->delimiter(',');
    };

    CLI::App* poly = app.add_subcommand(
        "poly", "placement-count polynomial of one figure multiset");
    add_common(poly, true);
    poly->add_option("--dim", flags.dim, "expected dimension of the input");
    poly->add_flag("--box", flags.box, "count on the box instead of the torus");

    CLI::App* sequence = app.add_subcommand(
        "sequence", "binomial-type polynomial sequence over a weighted catalog");
    add_common(sequence, true);
    sequence->add_option("--dim", flags.dim, "expected dimension of the input");
    sequence->add_option("--max-weight", flags.max_weight, "table length K")
        ->capture_default_str();

    CLI::App* chromatic = app.add_subcommand(
        "chromatic", "chromatic-polynomial coefficient table for toroidal grids");
    add_common(chromatic, false);
    chromatic->add_option("--dim", flags.dim, "grid dimension")->required();
    chromatic->add_option("--max-weight", flags.max_weight,
                          "table length K (default 3)");

    CLI::App* selftest = app.add_subcommand(
        "selftest", "run the full acceptance suite and print a scorecard");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (chromatic->parsed() && chromatic->count("--max-weight") == 0) flags.max_weight = 3;

    toric_options opts = make_options(flags);
    toric_report* report = nullptr;

    if (poly->parsed() || sequence->parsed()) {
        toric_figure_set* fs = nullptr;
        int early = load_input(flags, &fs);
        if (early >= 0) return early;
        toric_status status = poly->parsed() ? toric_run_poly(fs, &opts, &report)
                                             : toric_run_sequence(fs, &opts, &report);
        toric_figure_set_free(fs);
        return finish(status, report, flags.format);
    }
    toric_status status = chromatic->parsed()
                              ? toric_run_chromatic(flags.dim, &opts, &report)
                              : toric_run_selftest(&opts, &report);
    return finish(status, report, flags.format);
}
