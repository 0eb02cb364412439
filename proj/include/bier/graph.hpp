#pragma once

#include <array>
#include <string>

#include "bier/complex.hpp"

namespace bier {

/// A simple graph on labels 1..32 with bitset adjacency.
struct Graph {
  VertexSet vertices;
  std::array<VertexSet, VertexSet::kMaxLabel + 1> neighbors{};

  bool adjacent(int u, int v) const { return neighbors[u].contains(v); }
  int degree(int v) const { return neighbors[v].size(); }
  int num_edges() const;
  bool is_clique(VertexSet s) const;
  Graph induced(VertexSet s) const;
};

/// The 1-skeleton of K as a graph on its geometric vertices.
Graph one_skeleton(const SimplicialComplex& k);

/// Graphviz export; labels above `prime_offset` (when positive) print as primed.
std::string to_dot(const Graph& g, int prime_offset = 0);

}  // namespace bier
