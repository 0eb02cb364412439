#pragma once

// Brute-force reference implementations. They work on raw masks and share
// no algorithm with the library.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Family = std::set<Mask>;

/// Every subset of every generator.
Family downward_closure(const std::vector<Mask>& generators);
/// Faces of the Alexander dual: J with [m] \ J not in K.
Family dual_faces(int m, const Family& k);
/// Inclusion-maximal members, ascending.
std::vector<Mask> maximal(const Family& f);
/// Facets of {I ⊔ J' : I ∈ K, J ∈ K^∨, I ∩ J = ∅} with J' = J shifted by m.
std::vector<Mask> bier_facets(int m, const std::vector<Mask>& k_facets);

/// Simple graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<Mask> adj;
};
/// Graph on the geometric vertices of the facets, relabelled 0..n-1 in label order.
Graph skeleton_graph(const std::vector<Mask>& facets);
/// Minimum number of independent sets covering all vertices (subset DP).
int chromatic_number(const Graph& g);
/// Some vertex subset of size >= 4 induces a connected 2-regular graph.
bool has_induced_long_cycle(const Graph& g);

/// Every downward-closed family on [m] except {} and 2^[m], as sorted facet
/// lists, by scanning all 2^(2^m) families. m <= 4.
std::vector<std::vector<Mask>> all_complexes_bitmap(int m);

/// Minimum over all permutations of [m] of the sorted permuted facet list.
std::vector<Mask> canonical(int m, const std::vector<Mask>& facets);
/// Canonical forms of the closure of {Γ4, G4, Γ6} under cone and dual, on [m].
std::set<std::vector<Mask>> min_colorable_closure(int m);

/// gcd of all maximal minors equals 1 (cofactor expansion, small sizes only).
bool unimodular(const std::vector<std::vector<std::int64_t>>& rows, int d);
/// No nontrivial Z_p combination of the rows vanishes.
bool independent_mod_p(const std::vector<std::vector<std::int64_t>>& rows, int d, int p);

/// Every facet's hyperplane strictly separates it from the other points,
/// decided by the sign of orientation determinants.
bool convex_by_orientation(const std::vector<std::vector<mpq_class>>& points,
                           const std::vector<std::vector<int>>& facets);

}  // namespace oracle
