#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "bier/complex.hpp"
#include "oracles.hpp"

namespace testing {

inline bier::SimplicialComplex cx(int m, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<bier::VertexSet> gens;
  for (auto f : facets) gens.emplace_back(f);
  return bier::SimplicialComplex::from_facets(m, gens);
}

inline std::vector<oracle::Mask> masks(const bier::SimplicialComplex& k) {
  std::vector<oracle::Mask> out;
  for (auto f : k.facets()) out.push_back(f.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline bier::SimplicialComplex from_masks(int m, const std::vector<oracle::Mask>& ms) {
  std::vector<bier::VertexSet> gens;
  for (auto x : ms) gens.emplace_back(x);
  return bier::SimplicialComplex::from_facets(m, gens);
}

}  // namespace testing
