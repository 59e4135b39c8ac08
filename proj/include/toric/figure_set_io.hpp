#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toric/catalog.hpp"
#include "toric/poly.hpp"

namespace toric {

struct FigureSetEntry {
    Figure figure;
    int multiplicity = 1;
    int weight = 0;
};

struct FigureSet {
    int dim = 0;
    std::vector<FigureSetEntry> entries;
};

// Figure-set document:
//   { "dim": d,
//     "figures": [ { "vertices": [[x, y, ...], ...],
//                    "edges": [[i, j], ...],      optional, default adjacency
//                    "multiplicity": c,           optional, default 1
//                    "weight": w } ] }            optional, default edge count
FigureSet parse_figure_set(const std::string& json_text);
FigureSet load_figure_set(const std::string& path);

// Existing path as-is, else <name>.json under $TORICLIB_DATA, else under
// fallback_dir when non-empty.
std::string resolve_input(const std::string& path_or_name, const std::string& fallback_dir = "");

// Expands multiplicities into one multiset.
FigureMultiset to_multiset(const FigureSet& fs);

// Weighted catalog; rejects repeated figures and multiplicities above 1.
Catalog to_catalog(const FigureSet& fs);

// Coefficients as exact strings, lowest degree first.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace toric
