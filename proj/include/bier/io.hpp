#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bier/complex.hpp"

namespace bier::io {

/// Parses `{"m": <int>, "facets": [[<int>...], ...]}`. Errors name the
/// offending field (e.g. `facets[2][0]`) and throw bier::Error(kInvalidInput).
/// Dominated facets are dropped with a message appended to `warnings`.
SimplicialComplex complex_from_json(const nlohmann::json& j, std::vector<std::string>* warnings = nullptr);
/// Same, from text; JSON syntax errors report line and column.
SimplicialComplex parse_complex(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Canonical form: facets by (cardinality, lex), vertices ascending.
nlohmann::json to_json(const SimplicialComplex& k);
nlohmann::json to_json(VertexSet s);

}  // namespace bier::io
