#include "bier/graph.hpp"

#include <sstream>

namespace bier {

int Graph::num_edges() const {
  int twice = 0;
  for (int v : vertices) twice += degree(v);
  return twice / 2;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s.without(v)).subset_of(neighbors[v])) return false;
  }
  return true;
}

Graph Graph::induced(VertexSet s) const {
  Graph g;
  g.vertices = vertices & s;
  for (int v : g.vertices) g.neighbors[v] = neighbors[v] & g.vertices;
  return g;
}

Graph one_skeleton(const SimplicialComplex& k) {
  Graph g;
  g.vertices = k.vertices();
  for (VertexSet f : k.facets()) {
    for (int v : f) g.neighbors[v] = g.neighbors[v] | f.without(v);
  }
  return g;
}

std::string to_dot(const Graph& g, int prime_offset) {
  auto name = [prime_offset](int v) {
    if (prime_offset > 0 && v > prime_offset) return "\"" + std::to_string(v - prime_offset) + "'\"";
    return std::to_string(v);
  };
  std::ostringstream out;
  out << "graph sk1 {\n";
  for (int v : g.vertices) out << "  " << name(v) << ";\n";
  for (int u : g.vertices) {
    for (int v : g.neighbors[u]) {
      if (u < v) out << "  " << name(u) << " -- " << name(v) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bier
