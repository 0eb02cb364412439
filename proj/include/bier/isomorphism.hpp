#pragma once

#include <optional>
#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// A bijection between the geometric vertices of two complexes.
/// `image[v]` is the label v maps to; 0 for labels that are not vertices.
struct IsoCertificate {
  std::vector<int> image;

  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
};

/// True when `cert` carries the facets of `a` exactly onto the facets of `b`.
bool verify_certificate(const SimplicialComplex& a, const SimplicialComplex& b, const IsoCertificate& cert);

/// Combinatorial isomorphism on geometric vertices (ghosts ignored).
/// Backtracking over candidates with matching vertex invariants; the
/// returned certificate is always verified before it is handed out.
std::optional<IsoCertificate> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Lexicographically least sorted facet-mask list over all permutations of
/// the ground set [m]. Equal canonical forms ⟺ isomorphic as complexes on [m].
/// Intended for m ≤ 8.
std::vector<VertexSet::Mask> canonical_form(const SimplicialComplex& k);

}  // namespace bier
