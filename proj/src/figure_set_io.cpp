#include "toric/figure_set_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<int>();
}

FigureSetEntry parse_entry(const json& j, int dim, std::size_t pos) {
    const std::string where = "figure " + std::to_string(pos);
    if (!j.is_object()) throw ParseError(where + " must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw ParseError(where + " needs a non-empty vertices array");

    std::vector<Point> vertices;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError(where + ": each vertex needs " + std::to_string(dim) +
                             " coordinates");
        Point p;
        for (const auto& x : row) p.push_back(require_int(x, where + ": vertex coordinate"));
        vertices.push_back(std::move(p));
    }

    FigureSetEntry entry;
    try {
        if (j.contains("edges")) {
            if (!j["edges"].is_array()) throw ParseError(where + ": edges must be an array");
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : j["edges"]) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError(where + ": each edge needs two vertex indices");
                edges.emplace_back(require_int(e[0], where + ": edge index"),
                                   require_int(e[1], where + ": edge index"));
            }
            entry.figure = canonicalize(dim, std::move(vertices), std::move(edges));
        } else {
            entry.figure = figure_from_cells(dim, std::move(vertices));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }

    entry.multiplicity = j.contains("multiplicity")
                             ? require_int(j["multiplicity"], where + ": multiplicity")
                             : 1;
    if (entry.multiplicity < 1) throw ParseError(where + ": multiplicity must be >= 1");
    entry.weight = j.contains("weight") ? require_int(j["weight"], where + ": weight")
                                        : entry.figure.edge_count();
    if (entry.weight < 0) throw ParseError(where + ": weight must be >= 0");
    return entry;
}

}  // namespace

FigureSet parse_figure_set(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("figure set must be a JSON object");
    if (!doc.contains("dim")) throw ParseError("figure set needs a dim field");
    int dim = require_int(doc["dim"], "dim");
    if (dim < 1) throw ParseError("dim must be >= 1");
    if (!doc.contains("figures") || !doc["figures"].is_array())
        throw ParseError("figure set needs a figures array");

    FigureSet fs;
    fs.dim = dim;
    for (std::size_t i = 0; i < doc["figures"].size(); ++i)
        fs.entries.push_back(parse_entry(doc["figures"][i], dim, i));
    return fs;
}

FigureSet load_figure_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_figure_set(buf.str());
}

std::string resolve_input(const std::string& path_or_name, const std::string& fallback_dir) {
    namespace fs = std::filesystem;
    if (fs::exists(path_or_name)) return path_or_name;
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("TORICLIB_DATA")) dirs.push_back(env);
    if (!fallback_dir.empty()) dirs.push_back(fallback_dir);
    for (const auto& dir : dirs) {
        fs::path candidate = fs::path(dir) / (path_or_name + ".json");
        if (fs::exists(candidate)) return candidate.string();
    }
    throw ParseError("cannot find input '" + path_or_name +
                     "' (not a file, not a catalog under TORICLIB_DATA)");
}

FigureMultiset to_multiset(const FigureSet& fs) {
    std::vector<Figure> figures;
    for (const auto& e : fs.entries)
        for (int i = 0; i < e.multiplicity; ++i) figures.push_back(e.figure);
    return make_multiset(fs.dim, figures);
}

Catalog to_catalog(const FigureSet& fs) {
    std::vector<Figure> figures;
    std::vector<int> weights;
    for (const auto& e : fs.entries) {
        if (e.multiplicity != 1)
            throw ParseError("catalog input lists each figure once (multiplicity 1)");
        figures.push_back(e.figure);
        weights.push_back(e.weight);
    }
    try {
        return make_catalog(fs.dim, std::move(figures), std::move(weights));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("not a valid catalog: ") + e.what());
    }
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_str(c));
    return out;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (!c.is_string()) throw ParseError("polynomial coefficients must be strings");
        coeffs.push_back(rational_parse(c.get<std::string>()));
    }
    return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace toric
