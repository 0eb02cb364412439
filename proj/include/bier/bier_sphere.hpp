#pragma once

#include <string>
#include <vector>

#include "bier/complex.hpp"
#include "bier/isomorphism.hpp"

namespace bier {

/// Bier(K) on the doubled ground set: labels 1..m are [m], labels m+1..2m are [m'].
struct BierSphere {
  int m = 0;
  SimplicialComplex base;     // K on [m]
  SimplicialComplex dual;     // K^∨ on [m'], stored with labels 1..m
  SimplicialComplex complex;  // on [2m]

  int primed(int i) const { return i + m; }
};

/// Facets are the complements of the minimal non-faces. The result lives on
/// [m] with label i standing for i'.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// Deleted join of K and K^∨.
BierSphere bier(const SimplicialComplex& k);

/// Computable consequences of being an (m-2)-sphere.
struct CheckReport {
  bool pure = false;
  bool dimension_ok = false;
  bool pseudomanifold = false;
  bool euler_ok = false;
  bool connected = false;
  bool vertex_count_ok = false;
  bool no_antipodal_pair = false;
  std::int64_t euler_characteristic = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CheckReport check_sphere(const BierSphere& b);

/// The swap i <-> i', verified to carry Bier(K) onto Bier(K^∨).
/// Throws std::logic_error if the swap fails to be an isomorphism.
IsoCertificate bier_symmetry_witness(const SimplicialComplex& k);

/// The swap i <-> i' on [2m] without verification.
IsoCertificate prime_swap(int m);

}  // namespace bier
