#pragma once

#include <nlohmann/json.hpp>

#include "heitmann/lattice/glue.hpp"

namespace heitmann::lattice {

/// {"points": [...], "covers": [["p", "q"], ...]} with p < q.
FinPoset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const FinPoset& p);

/// An element is written as the list of point names in its downset.
Mask element_from_json(const Lattice& t, const nlohmann::json& j);
nlohmann::json element_to_json(const Lattice& t, Mask a);

/// {"kind": "ideal"|"filter", "lattices": [poset...],
///  "overlaps": [{"i":0, "j":1, "s_ij": [...], "s_ji": [...]}, ...]}.
Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const Diagram& d);

}  // namespace heitmann::lattice
