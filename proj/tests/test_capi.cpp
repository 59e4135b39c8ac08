#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "toric/toric.h"

namespace {

const char* kDominoDoc = R"({
  "dim": 2,
  "figures": [
    { "vertices": [[0, 0], [1, 0]] },
    { "vertices": [[0, 0], [0, 1]] }
  ]
})";

struct SetHandle {
    toric_figure_set* fs = nullptr;
    ~SetHandle() { toric_figure_set_free(fs); }
};

struct ReportHandle {
    toric_report* report = nullptr;
    ~ReportHandle() { toric_report_free(report); }

    nlohmann::json doc() const { return nlohmann::json::parse(toric_report_json(report)); }
};

}  // namespace

TEST_CASE("version and option defaults") {
    REQUIRE(toric_version() != nullptr);
    CHECK(std::strlen(toric_version()) > 0);

    toric_options opts;
    toric_options_init(&opts);
    CHECK(opts.box == 0);
    CHECK(opts.max_weight == 2);
    CHECK(opts.allow_large == 0);
    CHECK(opts.verify_n == nullptr);
    CHECK(opts.verify_n_count == 0);
    toric_options_init(nullptr);  // tolerated
}

TEST_CASE("parsing figure sets through the C boundary") {
    SetHandle h;
    REQUIRE(toric_figure_set_parse(kDominoDoc, &h.fs) == TORIC_OK);
    CHECK(toric_figure_set_dim(h.fs) == 2);
    CHECK(toric_figure_set_size(h.fs) == 2);

    toric_figure_set* out = nullptr;
    CHECK(toric_figure_set_parse(nullptr, &out) == TORIC_ERR_USAGE);
    CHECK(toric_figure_set_parse("{]", &out) == TORIC_ERR_PARSE);
    CHECK(out == nullptr);
    CHECK(std::strlen(toric_last_error()) > 0);
}

TEST_CASE("loading a named catalog from the data directory") {
    SetHandle h;
    REQUIRE(toric_figure_set_load("dominoes2d", &h.fs) == TORIC_OK);
    CHECK(toric_figure_set_dim(h.fs) == 2);
    CHECK(toric_figure_set_size(h.fs) == 2);

    toric_figure_set* out = nullptr;
    CHECK(toric_figure_set_load("does_not_exist_anywhere", &out) == TORIC_ERR_PARSE);
}

TEST_CASE("placement polynomial run with verification") {
    SetHandle h;
    REQUIRE(toric_figure_set_parse(kDominoDoc, &h.fs) == TORIC_OK);

    toric_options opts;
    toric_options_init(&opts);
    const int ns[] = {9, 10};
    opts.verify_n = ns;
    opts.verify_n_count = 2;

    ReportHandle r;
    REQUIRE(toric_run_poly(h.fs, &opts, &r.report) == TORIC_OK);
    CHECK(toric_report_ok(r.report) == 1);

    nlohmann::json doc = r.doc();
    CHECK(doc["command"] == "poly");
    CHECK(doc["ok"] == true);
    // One H and one V domino: N^2 - 4N, exact from n0 = 9 onward.
    CHECK(doc["pretty"][0] == "N^2 - 4N");
    CHECK(doc["n0"] == 9);
    CHECK(doc["checks"].size() == 2);
}

TEST_CASE("sequence run reports both assembly routes") {
    SetHandle h;
    REQUIRE(toric_figure_set_parse(kDominoDoc, &h.fs) == TORIC_OK);

    toric_options opts;
    toric_options_init(&opts);
    opts.max_weight = 3;

    ReportHandle r;
    REQUIRE(toric_run_sequence(h.fs, &opts, &r.report) == TORIC_OK);
    REQUIRE(toric_report_ok(r.report) == 1);

    nlohmann::json doc = r.doc();
    CHECK(doc["polynomials"].size() == 4);
    CHECK(doc["polynomials"] == doc["polynomials_schema"]);
    CHECK(doc["pretty"][1] == "2N");
    CHECK(doc["pretty"][2] == "2N^2 - 7N");
}

TEST_CASE("chromatic run in two dimensions") {
    toric_options opts;
    toric_options_init(&opts);
    const int ns[] = {4};
    opts.verify_n = ns;
    opts.verify_n_count = 1;

    ReportHandle r;
    REQUIRE(toric_run_chromatic(2, &opts, &r.report) == TORIC_OK);
    CHECK(toric_report_ok(r.report) == 1);

    nlohmann::json doc = r.doc();
    CHECK(doc["catalog_size"] == 8);
    CHECK(doc["pretty"][1] == "2N");
    CHECK(doc["pretty"][2] == "2N^2 - N");
}

TEST_CASE("status codes for bad requests") {
    SetHandle h;
    REQUIRE(toric_figure_set_parse(kDominoDoc, &h.fs) == TORIC_OK);

    toric_report* out = nullptr;
    CHECK(toric_run_poly(nullptr, nullptr, &out) == TORIC_ERR_USAGE);
    CHECK(toric_run_poly(h.fs, nullptr, nullptr) == TORIC_ERR_USAGE);

    toric_options opts;
    toric_options_init(&opts);
    opts.max_weight = 9;
    CHECK(toric_run_sequence(h.fs, &opts, &out) == TORIC_ERR_GUARD);
    CHECK(out == nullptr);
    CHECK(std::strlen(toric_last_error()) > 0);

    toric_options_init(&opts);
    CHECK(toric_run_chromatic(0, &opts, &out) == TORIC_ERR_PARSE);
}
