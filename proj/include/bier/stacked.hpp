#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bier/complex.hpp"

namespace bier::chordal {

struct StellarStep {
  VertexSet facet;
  int apex = 0;
};

/// Exact rational realization of a chordal Bier sphere as the boundary of a
/// stacked polytope in R^(m-1).
struct StackedRealization {
  int dimension = 0;
  std::vector<int> labels;                       // Bier labels, ascending
  std::vector<std::vector<mpq_class>> points;    // parallel to labels
  std::vector<VertexSet> facets;                 // canonical order, Bier labels
  std::vector<StellarStep> provenance;
};

/// Base simplex at the origin and the unit vectors; each apex is pushed out
/// of the centroid of its facet, halving the push until the exact convexity
/// test passes. Throws NotChordalBier when Bier(K) is not chordal.
StackedRealization realize_stacked(const SimplicialComplex& k);

/// Every facet spans a hyperplane with all other vertices strictly on one side.
bool verify_convex_position(const StackedRealization& r);

/// "V F" header, V rows of rationals "p/q", then F rows of 0-based indices.
std::string to_off(const StackedRealization& r);

}  // namespace bier::chordal
