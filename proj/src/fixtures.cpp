#include "bier/fixtures.hpp"

#include <algorithm>

#include "bier/error.hpp"

namespace bier::fixtures {

SimplicialComplex gamma3() { return SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}}); }
SimplicialComplex gamma4() { return SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}}); }
SimplicialComplex g4() { return SimplicialComplex::from_facets(3, {{1, 2}}); }
SimplicialComplex gamma5() { return SimplicialComplex::from_facets(3, {{1, 2}, {3}}); }
SimplicialComplex gamma6() { return SimplicialComplex::from_facets(3, {{1}, {2}, {3}}); }

SimplicialComplex km(int m) {
  if (m < 5 || m > 16) throw Error(ErrorCode::kBadM, "K_m is defined for 5 <= m <= 16, got " + std::to_string(m));
  std::vector<VertexSet> mf{VertexSet::range(1, m - 2), VertexSet::range(2, m - 1)};
  for (int i = 2; i <= m - 1; ++i) mf.push_back({i, m});
  auto k = SimplicialComplex::from_minimal_non_faces(m, mf);
  auto check = minimal_non_faces(k);
  std::vector<VertexSet> expected = mf;
  std::sort(expected.begin(), expected.end(), CanonicalLess{});
  if (check != expected) throw Error(ErrorCode::kBadM, "K_m minimal non-faces did not round-trip");
  return k;
}

SimplicialComplex skeleton(int m, int k) {
  if (k < 0 || k >= m) throw Error(ErrorCode::kBadM, "skeleton needs 0 <= k < m");
  return bier::skeleton(SimplicialComplex::simplex(m, VertexSet::ground(m)), k);
}

SimplicialComplex simplex(int m, int k) {
  if (k < 0 || k > m) throw Error(ErrorCode::kBadM, "simplex needs 0 <= k <= m");
  return SimplicialComplex::simplex(m, VertexSet::ground(k));
}

SimplicialComplex cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kBadM, "cycles need n >= 3");
  std::vector<VertexSet> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  return SimplicialComplex::from_facets(n, std::move(edges));
}

}  // namespace bier::fixtures
