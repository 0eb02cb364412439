#include "bier/io.hpp"

#include <algorithm>

#include "bier/error.hpp"

namespace bier::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::kInvalidInput, field + ": " + message);
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

SimplicialComplex complex_from_json(const nlohmann::json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) fail("<root>", "expected an object with fields \"m\" and \"facets\"");
  if (!j.contains("m")) fail("m", "missing");
  if (!j.at("m").is_number_integer()) fail("m", "expected an integer");
  const auto m = j.at("m").get<std::int64_t>();
  if (m < 1 || m > SimplicialComplex::kMaxGround) fail("m", "must lie in 1..32, got " + std::to_string(m));
  if (!j.contains("facets")) fail("facets", "missing");
  const auto& list = j.at("facets");
  if (!list.is_array()) fail("facets", "expected an array of arrays");
  if (list.empty()) fail("facets", "the empty family is not a complex; use [[]] for {∅}");

  std::vector<VertexSet> gens;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    if (!list[i].is_array()) fail(where, "expected an array of vertex labels");
    VertexSet s;
    for (std::size_t t = 0; t < list[i].size(); ++t) {
      const std::string at = where + "[" + std::to_string(t) + "]";
      const auto& v = list[i][t];
      if (!v.is_number_integer()) fail(at, "expected an integer vertex label");
      const auto label = v.get<std::int64_t>();
      if (label < 1 || label > m) fail(at, "vertex " + std::to_string(label) + " outside 1.." + std::to_string(m));
      if (s.contains(static_cast<int>(label))) fail(at, "repeated vertex " + std::to_string(label));
      s = s.with(static_cast<int>(label));
    }
    gens.push_back(s);
  }
  int dropped = 0;
  auto k = SimplicialComplex::from_facets(static_cast<int>(m), std::move(gens), &dropped);
  if (dropped > 0 && warnings != nullptr) {
    warnings->push_back("dropped " + std::to_string(dropped) + " dominated or duplicate facet(s)");
  }
  return k;
}

SimplicialComplex parse_complex(const std::string& text, std::vector<std::string>* warnings) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::kInvalidInput,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  return complex_from_json(j, warnings);
}

nlohmann::json to_json(VertexSet s) {
  auto arr = nlohmann::json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

nlohmann::json to_json(const SimplicialComplex& k) {
  nlohmann::json out;
  out["m"] = k.ground_size();
  auto facets = nlohmann::json::array();
  for (VertexSet f : k.facets()) facets.push_back(to_json(f));
  out["facets"] = std::move(facets);
  return out;
}

}  // namespace bier::io
