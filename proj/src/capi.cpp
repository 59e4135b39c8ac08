#include "toric/toric.h"

#include <stdexcept>
#include <string>

#include "toric/errors.hpp"
#include "toric/figure_set_io.hpp"
#include "toric/report.hpp"

#ifndef TORIC_DEFAULT_DATA_DIR
#define TORIC_DEFAULT_DATA_DIR ""
#endif

struct toric_figure_set {
    toric::FigureSet value;
};

struct toric_report {
    std::string text;
    bool ok = false;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
toric_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return TORIC_OK;
    } catch (const toric::ParseError& e) {
        g_last_error = e.what();
        return TORIC_ERR_PARSE;
    } catch (const toric::GuardError& e) {
        g_last_error = e.what();
        return TORIC_ERR_GUARD;
    } catch (const toric::BudgetError& e) {
        g_last_error = e.what();
        return TORIC_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return TORIC_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TORIC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TORIC_ERR_INTERNAL;
    }
}

toric_status usage_error(const char* what) {
    g_last_error = what;
    return TORIC_ERR_USAGE;
}

toric::RunOptions convert(const toric_options* opts) {
    toric::RunOptions out;
    if (!opts) return out;
    out.box = opts->box != 0;
    out.max_weight = opts->max_weight;
    out.allow_large = opts->allow_large != 0;
    for (int i = 0; i < opts->verify_n_count; ++i) out.verify_n.push_back(opts->verify_n[i]);
    return out;
}

toric_status emit(nlohmann::json doc, toric_report** out) {
    auto* report = new toric_report;
    report->ok = doc.value("ok", false);
    report->text = doc.dump(2);
    *out = report;
    return TORIC_OK;
}

}  // namespace

extern "C" {

const char* toric_version(void) { return "0.1.0"; }

const char* toric_last_error(void) { return g_last_error.c_str(); }

void toric_options_init(toric_options* opts) {
    if (!opts) return;
    opts->box = 0;
    opts->max_weight = 2;
    opts->allow_large = 0;
    opts->verify_n = nullptr;
    opts->verify_n_count = 0;
}

toric_status toric_figure_set_parse(const char* json_text, toric_figure_set** out) {
    if (!json_text || !out) return usage_error("null argument");
    *out = nullptr;
    return guarded([&] { *out = new toric_figure_set{toric::parse_figure_set(json_text)}; });
}

toric_status toric_figure_set_load(const char* path_or_name, toric_figure_set** out) {
    if (!path_or_name || !out) return usage_error("null argument");
    *out = nullptr;
    return guarded([&] {
        std::string path = toric::resolve_input(path_or_name, TORIC_DEFAULT_DATA_DIR);
        *out = new toric_figure_set{toric::load_figure_set(path)};
    });
}

void toric_figure_set_free(toric_figure_set* fs) { delete fs; }

int toric_figure_set_dim(const toric_figure_set* fs) { return fs ? fs->value.dim : 0; }

int toric_figure_set_size(const toric_figure_set* fs) {
    return fs ? static_cast<int>(fs->value.entries.size()) : 0;
}

toric_status toric_run_poly(const toric_figure_set* fs, const toric_options* opts,
                            toric_report** out) {
    if (!fs || !out) return usage_error("null argument");
    *out = nullptr;
    return guarded([&] { emit(toric::run_poly_report(fs->value, convert(opts)), out); });
}

toric_status toric_run_sequence(const toric_figure_set* fs, const toric_options* opts,
                                toric_report** out) {
    if (!fs || !out) return usage_error("null argument");
    *out = nullptr;
    return guarded([&] { emit(toric::run_sequence_report(fs->value, convert(opts)), out); });
}

toric_status toric_run_chromatic(int dim, const toric_options* opts, toric_report** out) {
    if (!out) return usage_error("null argument");
    *out = nullptr;
    return guarded([&] { emit(toric::run_chromatic_report(dim, convert(opts)), out); });
}

toric_status toric_run_selftest(const toric_options* opts, toric_report** out) {
    if (!out) return usage_error("null argument");
    *out = nullptr;
    return guarded([&] { emit(toric::run_selftest_report(convert(opts)), out); });
}

const char* toric_report_json(const toric_report* report) {
    return report ? report->text.c_str() : "";
}

int toric_report_ok(const toric_report* report) {
    return report && report->ok ? 1 : 0;
}

void toric_report_free(toric_report* report) { delete report; }

}  // extern "C"
