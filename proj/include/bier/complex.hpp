#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bier/vertex_set.hpp"

namespace bier {

/// A simplicial complex on the ground set [m], stored by its facets.
///
/// Facets form an antichain and are kept in canonical order, so two
/// complexes are equal exactly when they have the same ground set and the
/// same face family. The complex {∅} is represented by the single facet ∅;
/// the empty family is not a complex and is rejected.
class SimplicialComplex {
 public:
  static constexpr int kMaxGround = VertexSet::kMaxLabel;

  /// Generated by `generators`: dominated and duplicate sets are dropped.
  /// If `dropped` is non-null it receives the number of generators removed.
  static SimplicialComplex from_facets(int m, std::vector<VertexSet> generators, int* dropped = nullptr);
  /// The complex whose minimal non-faces are exactly `minimal_non_faces`
  /// (any family works; the result's MF is the inclusion-minimal part).
  static SimplicialComplex from_minimal_non_faces(int m, std::span<const VertexSet> minimal_non_faces);

  static SimplicialComplex void_complex(int m) { return from_facets(m, {VertexSet{}}); }
  static SimplicialComplex simplex(int m, VertexSet s) { return from_facets(m, {s}); }
  static SimplicialComplex boundary_of_simplex(int m, VertexSet s);

  int ground_size() const { return m_; }
  VertexSet ground() const { return VertexSet::ground(m_); }
  std::span<const VertexSet> facets() const { return facets_; }

  bool contains(VertexSet face) const;
  /// Geometric vertices: the union of all facets.
  VertexSet vertices() const { return vertices_; }
  VertexSet ghost_vertices() const { return ground() - vertices_; }
  int dimension() const;
  bool is_pure() const;
  bool is_void() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == ground(); }

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, std::vector<VertexSet> facets);

  int m_ = 0;
  std::vector<VertexSet> facets_;
  VertexSet vertices_;
};

struct FVector {
  /// counts[i + 1] = f_i for i = -1..m-1.
  std::vector<std::int64_t> counts;

  std::int64_t at(int dim) const {
    const auto idx = static_cast<std::size_t>(dim + 1);
    return dim < -1 || idx >= counts.size() ? 0 : counts[idx];
  }
  std::int64_t total() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// All faces, ∅ included, in canonical order.
std::vector<VertexSet> faces(const SimplicialComplex& k);
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k);

/// K ∩ 2^I on the same ground set; vertices outside I become ghosts.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet i);
SimplicialComplex link(const SimplicialComplex& k, VertexSet face);
SimplicialComplex deletion(const SimplicialComplex& k, int vertex);

/// Join of complexes with disjoint geometric vertex sets, on the larger ground set.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// {v} * K; the ground set grows to include v if needed.
SimplicialComplex cone(const SimplicialComplex& k, int apex);
/// ∂Δ_{v,w} * K.
SimplicialComplex suspension(const SimplicialComplex& k, int v, int w);
SimplicialComplex skeleton(const SimplicialComplex& k, int n);
FVector f_vector(const SimplicialComplex& k);

/// `image[v]` is the new label of v (index 0 unused). Labels not listed map to themselves.
SimplicialComplex relabel(const SimplicialComplex& k, std::span<const int> image, int new_m);
/// Geometric vertices renumbered 1..f0 in increasing order; ghosts dropped.
SimplicialComplex compact_labels(const SimplicialComplex& k);

}  // namespace bier
