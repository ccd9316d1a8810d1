#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "packcolor/graph.hpp"
#include "packcolor/packing.hpp"

namespace packcolor {

class SubdivisionMap;

/// Coloring certificate:
///   { "schedule": [int], "classes": [[vertex]], "valid": bool }
/// Class arrays are sorted ascending; "valid" is the verify() verdict
/// against `g` at the time of writing.
[[nodiscard]] nlohmann::json certificate_json(const Graph& g, const PackingColoring& c);

/// Same document plus "lineage": one entry per vertex of S(G), either
/// {"original": v} or {"midpoint": [u, v]}.
[[nodiscard]] nlohmann::json lifted_certificate_json(const SubdivisionMap& m, const PackingColoring& c);

/// Reads the "schedule" and "classes" keys; "valid" and "lineage" are
/// ignored (the caller re-verifies). Throws std::invalid_argument on a
/// structurally malformed document.
[[nodiscard]] PackingColoring coloring_from_json(const nlohmann::json& doc, std::size_t order);

}  // namespace packcolor
