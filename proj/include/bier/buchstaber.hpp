#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bier/bier_sphere.hpp"

namespace bier::buchstaber {

using Vector = std::vector<std::int64_t>;

/// Vertex → vector in Z^d (modulus 0) or Z_p^d (modulus p).
struct CharacteristicMap {
  int target_rank = 0;
  int modulus = 0;
  std::map<int, Vector> vectors;
};

struct FacetVerdict {
  VertexSet facet;
  bool independent = false;
};

struct ValidityReport {
  bool valid = false;
  std::vector<FacetVerdict> facets;
};

/// Rows extend to a basis of Z^d: every elementary divisor is 1, i.e. the
/// maximal minors have gcd 1. Exact (GMP) fraction-free elimination.
bool is_unimodular_part(const std::vector<Vector>& rows, int d);
/// Rank of the rows over Z_p.
int rank_mod_p(std::vector<Vector> rows, int p);

/// Per-facet verdicts; throws MissingVertexAssignment if a geometric vertex
/// has no vector (or one of the wrong length).
ValidityReport validate_char_map(const SimplicialComplex& k, const CharacteristicMap& map);

/// i, i' ↦ e_i for i < m and m, m' ↦ e_1 + ... + e_{m-1}, restricted to the
/// geometric vertices of Bier(K).
CharacteristicMap phi_map(const BierSphere& b, int modulus = 0);

/// f_0(K) - f_{m-2}(K) + 1.
int buchstaber_formula(const SimplicialComplex& k);

enum class OracleStatus { kExact, kBudgetExceeded };

struct OracleOptions {
  std::int64_t budget = 100'000'000;  // search nodes per top-level branch
  int jobs = 1;
};

struct OracleResult {
  OracleStatus status = OracleStatus::kExact;
  int value = 0;        // s_p(L) when status is kExact
  int target_rank = 0;  // f_0(L) - value
  CharacteristicMap certificate;
  /// Ranks d below target_rank shown impossible by exhaustive search
  /// (ranks below the largest facet size are impossible outright).
  std::vector<int> refuted_ranks;
  std::int64_t nodes = 0;
};

/// Exhaustive search for the mod-p Buchstaber number. Limited to
/// p ∈ {2,3}, at most 8 geometric vertices and dimension ≤ 3; throws
/// TooLargeForOracle outside that envelope.
OracleResult s_p_oracle(const SimplicialComplex& l, int p, const OracleOptions& options = {});

struct BierBuchstaber {
  int value = 0;
  int upper_bound = 0;  // f_0(Bier(K)) - (m - 1)
  CharacteristicMap certificate;
};

/// The closed-form value with φ as the lower-bound certificate (validated
/// over `modulus`, 0 for Z) and the dimension bound as the upper bound.
BierBuchstaber buchstaber_of_bier(const SimplicialComplex& k, int modulus);

bool is_prime(int p);

}  // namespace bier::buchstaber
