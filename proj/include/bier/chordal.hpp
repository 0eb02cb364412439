#pragma once

#include <span>
#include <string>
#include <vector>

#include "bier/bier_sphere.hpp"
#include "bier/graph.hpp"

namespace bier::chordal {

/// Either a perfect elimination ordering or an induced cycle of length >= 4.
struct ChordalityReport {
  bool chordal = false;
  std::vector<int> elimination_order;
  std::vector<int> induced_cycle;
};

/// Lexicographic breadth-first search; ties go to the smallest label.
std::vector<int> lex_bfs(const Graph& g);
/// Each vertex's neighbours later in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);
/// A chordless cycle of length >= 4 in cyclic order, or empty if none exists.
std::vector<int> find_induced_cycle(const Graph& g);
/// True when `cycle` is an induced cycle of length >= 4 in `g`.
bool is_induced_cycle(const Graph& g, std::span<const int> cycle);

ChordalityReport is_chordal(const Graph& g);
ChordalityReport is_chordal(const SimplicialComplex& k);

enum class Side { kBase, kDual };
const char* to_string(Side side);

struct ChordalClassification {
  bool chordal = false;
  /// Stellar subdivision count: vertices of the edgeless side (m >= 4), 0 for m <= 3.
  int k = 0;
  Side side = Side::kBase;
  /// Combinatorial type of the simple polytope, e.g. "vc^2(Delta^3)".
  std::string polytope;
  std::vector<int> witness;  // induced cycle in Bier(K) when not chordal
};

/// m = 2: always chordal. m = 3: chordal iff Bier(K) ≅ Z_3. m >= 4: chordal
/// iff K or K^∨ has no edges; if both do, the side with fewer vertices is
/// used, ties going to K. Non-chordal answers carry an induced cycle and a
/// disagreement with the graph test throws std::logic_error.
ChordalClassification classify_chordal_bier(const SimplicialComplex& k);

/// Replaces facet `facet` by the cone with apex `apex` over its boundary.
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, VertexSet facet, int apex);

/// ∂Δ^n on [n+1] followed by k stellar subdivisions with apexes n+2, n+3, ...
/// An empty schedule subdivides, at each step, the first facet (canonical
/// order) containing the newest apex. Throws BadSchedule when a scheduled
/// facet is missing or the schedule length differs from k.
SimplicialComplex truncation_fixture(int n, int k, std::span<const VertexSet> schedule = {});

}  // namespace bier::chordal
