#include "bier/bier_sphere.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "bier/error.hpp"

namespace bier {

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  const auto mf = minimal_non_faces(k);
  if (mf.empty()) throw Error(ErrorCode::kDualOfFullSimplex, "the full simplex has no Alexander dual");
  std::vector<VertexSet> gens;
  gens.reserve(mf.size());
  for (VertexSet s : mf) gens.push_back(k.ground() - s);
  return SimplicialComplex::from_facets(k.ground_size(), std::move(gens));
}

BierSphere bier(const SimplicialComplex& k) {
  const int m = k.ground_size();
  if (m < 2 || 2 * m > SimplicialComplex::kMaxGround) {
    throw Error(ErrorCode::kBadGroundSize, "Bier spheres need 2 <= m <= 16, got m=" + std::to_string(m));
  }
  SimplicialComplex dual = alexander_dual(k);
  const VertexSet ground = k.ground();
  // Facets are I ⊔ ([m] \ (I ∪ {x}))' with I ∈ K, x ∉ I and I ∪ {x} ∉ K:
  // J' ∈ K^∨ exactly when [m] \ J ∉ K, and maximality forces |I| + |J| = m - 1.
  std::vector<VertexSet> gens;
  for (VertexSet i : faces(k)) {
    for (int x : ground - i) {
      const VertexSet grown = i.with(x);
      if (k.contains(grown)) continue;
      gens.push_back(i | (ground - grown).shifted(m));
    }
  }
  auto complex = SimplicialComplex::from_facets(2 * m, std::move(gens));
  return BierSphere{m, k, std::move(dual), std::move(complex)};
}

CheckReport check_sphere(const BierSphere& b) {
  CheckReport r;
  const int m = b.m;
  const auto& c = b.complex;
  const auto fv = f_vector(c);

  r.pure = c.is_pure();
  if (!r.pure) r.failures.push_back("not pure");
  r.dimension_ok = c.dimension() == m - 2;
  if (!r.dimension_ok) r.failures.push_back("dimension " + std::to_string(c.dimension()) + " != " + std::to_string(m - 2));

  std::unordered_map<VertexSet, int> ridge_count;
  for (VertexSet f : c.facets()) {
    for (int v : f) ++ridge_count[f.without(v)];
  }
  r.pseudomanifold = true;
  for (const auto& [ridge, count] : ridge_count) {
    if (count != 2) {
      r.pseudomanifold = false;
      r.failures.push_back("ridge " + ridge.to_string() + " lies in " + std::to_string(count) + " facets");
      break;
    }
  }

  for (int i = 0; i <= c.dimension(); ++i) r.euler_characteristic += (i % 2 == 0 ? 1 : -1) * fv.at(i);
  const std::int64_t expected_euler = 1 + ((m - 2) % 2 == 0 ? 1 : -1);
  r.euler_ok = r.euler_characteristic == expected_euler;
  if (!r.euler_ok) {
    r.failures.push_back("Euler characteristic " + std::to_string(r.euler_characteristic) + " != " +
                         std::to_string(expected_euler));
  }

  // Facets sharing a ridge are adjacent; union-find over facet indices.
  const auto facets = c.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<VertexSet, std::size_t> first_owner;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (int v : facets[i]) {
      auto [it, inserted] = first_owner.emplace(facets[i].without(v), i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < facets.size(); ++i) components += find(i) == i ? 1 : 0;
  r.connected = m < 3 || components == 1;
  if (!r.connected) r.failures.push_back("facet graph has " + std::to_string(components) + " components");

  const auto fk = f_vector(b.base);
  const std::int64_t expected_vertices = m + fk.at(0) - fk.at(m - 2);
  r.vertex_count_ok = fv.at(0) == expected_vertices;
  if (!r.vertex_count_ok) {
    r.failures.push_back("vertex count " + std::to_string(fv.at(0)) + " != " + std::to_string(expected_vertices));
  }

  r.no_antipodal_pair = true;
  for (VertexSet f : facets) {
    const VertexSet low = f & VertexSet::ground(m);
    const VertexSet high = (f - VertexSet::ground(m)).shifted(-m);
    if (low.intersects(high)) {
      r.no_antipodal_pair = false;
      r.failures.push_back("facet " + f.to_string() + " contains a pair {i,i'}");
      break;
    }
  }
  return r;
}

IsoCertificate prime_swap(int m) {
  IsoCertificate cert;
  cert.image.assign(static_cast<std::size_t>(2 * m) + 1, 0);
  for (int i = 1; i <= m; ++i) {
    cert.image[i] = i + m;
    cert.image[i + m] = i;
  }
  return cert;
}

IsoCertificate bier_symmetry_witness(const SimplicialComplex& k) {
  const BierSphere of_k = bier(k);
  const BierSphere of_dual = bier(of_k.dual);
  IsoCertificate swap = prime_swap(of_k.m);
  // Restrict to geometric vertices so the certificate is a bijection of vertex sets.
  for (std::size_t v = 1; v < swap.image.size(); ++v) {
    if (!of_k.complex.vertices().contains(static_cast<int>(v))) swap.image[v] = 0;
  }
  if (!verify_certificate(of_k.complex, of_dual.complex, swap)) {
    throw std::logic_error("i <-> i' does not carry Bier(K) onto Bier(K^v) for " + k.to_string());
  }
  return swap;
}

}  // namespace bier
