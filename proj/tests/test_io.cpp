#include <doctest.h>

#include <string>

#include "bier/error.hpp"
#include "bier/io.hpp"
#include "helpers.hpp"

using namespace bier;
using testing::cx;

namespace {

std::string error_of(const std::string& text) {
  try {
    io::parse_complex(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("complexes load from JSON") {
  CHECK(io::parse_complex(R"({"m": 3, "facets": [[1,2],[3]]})") == cx(3, {{1, 2}, {3}}));
  CHECK(io::parse_complex(R"({"m": 4, "facets": [[]]})").is_void());
}

TEST_CASE("dominated facets are dropped with a warning") {
  std::vector<std::string> warnings;
  auto k = io::parse_complex(R"({"m": 3, "facets": [[1,2],[1],[1,2]]})", &warnings);
  CHECK(k == cx(3, {{1, 2}}));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("dropped 2") != std::string::npos);
}

TEST_CASE("malformed input names the offending field") {
  CHECK(error_of(R"({"facets": [[1]]})").find("m") != std::string::npos);
  CHECK(error_of(R"({"m": 3, "facets": [[1],[2, 7]]})").find("facets[1][1]") != std::string::npos);
  CHECK(error_of(R"({"m": 3, "facets": [[1],["x"]]})").find("facets[1][0]") != std::string::npos);
  CHECK(error_of(R"({"m": 3, "facets": []})").find("facets") != std::string::npos);
  CHECK(error_of(R"({"m": 0, "facets": [[]]})").find("m") != std::string::npos);
  CHECK(error_of(R"({"m": 3, "facets": [[1,1]]})").find("facets[0]") != std::string::npos);
}

TEST_CASE("syntax errors report line and column") {
  const auto msg = error_of("{\"m\": 3,\n  \"facets\": [[1,2],]\n}");
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("output is canonical and round-trips") {
  const auto k = cx(4, {{3, 4}, {1}, {2, 4}});
  const auto j = io::to_json(k);
  CHECK(j.dump() == R"({"facets":[[1],[2,4],[3,4]],"m":4})");
  CHECK(io::complex_from_json(j) == k);
  CHECK(io::to_json(SimplicialComplex::void_complex(2)).dump() == R"({"facets":[[]],"m":2})");
}
