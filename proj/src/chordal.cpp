#include "bier/chordal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "bier/error.hpp"
#include "bier/fixtures.hpp"

namespace bier::chordal {

std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.vertices.size();
  std::array<std::vector<int>, VertexSet::kMaxLabel + 1> label;
  VertexSet unvisited = g.vertices;
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = 0;
    for (int v : unvisited) {
      if (best == 0 || label[v] > label[best]) best = v;
    }
    order.push_back(best);
    unvisited = unvisited.without(best);
    for (int w : g.neighbors[best] & unvisited) label[w].push_back(n - step);
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
  VertexSet later;
  for (int v : order) later = later.with(v);
  if (later != g.vertices || later.size() != static_cast<int>(order.size())) return false;
  for (int v : order) {
    later = later.without(v);
    if (!g.is_clique(g.neighbors[v] & later)) return false;
  }
  return true;
}

namespace {

// Shortest u-w path inside `allowed`, endpoints included; empty if none.
std::vector<int> shortest_path(const Graph& g, int u, int w, VertexSet allowed) {
  std::array<int, VertexSet::kMaxLabel + 1> parent{};
  std::deque<int> queue{u};
  VertexSet seen = VertexSet::singleton(u);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (int y : (g.neighbors[x] & allowed) - seen) {
      seen = seen.with(y);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen.contains(w)) return {};
  std::vector<int> path{w};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

// A vertex v with non-adjacent neighbours u, w closes an induced cycle with
// any shortest u-w path that avoids the rest of N[v].
std::vector<int> find_induced_cycle(const Graph& g) {
  for (int v : g.vertices) {
    const VertexSet closed = g.neighbors[v].with(v);
    for (int u : g.neighbors[v]) {
      for (int w : g.neighbors[v]) {
        if (w <= u || g.adjacent(u, w)) continue;
        const VertexSet allowed = (g.vertices - closed).with(u).with(w);
        auto path = shortest_path(g, u, w, allowed);
        if (path.empty()) continue;
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

bool is_induced_cycle(const Graph& g, std::span<const int> cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n < 4) return false;
  VertexSet s;
  for (int v : cycle) {
    if (!g.vertices.contains(v) || s.contains(v)) return false;
    s = s.with(v);
  }
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return g.induced(s).num_edges() == n;
}

ChordalityReport is_chordal(const Graph& g) {
  ChordalityReport report;
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    report.chordal = true;
    report.elimination_order = std::move(order);
    return report;
  }
  report.induced_cycle = find_induced_cycle(g);
  if (!is_induced_cycle(g, report.induced_cycle)) {
    throw std::logic_error("Lex-BFS rejected a graph without an induced cycle");
  }
  return report;
}

ChordalityReport is_chordal(const SimplicialComplex& k) { return is_chordal(one_skeleton(k)); }

const char* to_string(Side side) { return side == Side::kBase ? "K" : "dual"; }

ChordalClassification classify_chordal_bier(const SimplicialComplex& k) {
  const int m = k.ground_size();
  const auto b = bier(k);
  ChordalClassification out;
  const std::string delta = "Delta^" + std::to_string(m - 1);

  if (m == 2) {
    out.chordal = true;
    out.polytope = delta;
  } else if (m == 3) {
    out.chordal = are_isomorphic(b.complex, fixtures::cycle(3)).has_value();
    if (out.chordal) out.polytope = delta;
  } else {
    const bool base_edgeless = one_skeleton(k).num_edges() == 0;
    const bool dual_edgeless = one_skeleton(b.dual).num_edges() == 0;
    if (base_edgeless || dual_edgeless) {
      out.chordal = true;
      const int kv = k.vertices().size();
      const int dv = b.dual.vertices().size();
      if (base_edgeless && (!dual_edgeless || kv <= dv)) {
        out.side = Side::kBase;
        out.k = kv;
      } else {
        out.side = Side::kDual;
        out.k = dv;
      }
      out.polytope = out.k == 0 ? delta : "vc^" + std::to_string(out.k) + "(" + delta + ")";
    }
  }

  const auto graph = is_chordal(b.complex);
  if (graph.chordal != out.chordal) {
    throw std::logic_error("chordality classification disagrees with the graph test for " + k.to_string());
  }
  if (!out.chordal) out.witness = graph.induced_cycle;
  return out;
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, VertexSet facet, int apex) {
  const auto fs = k.facets();
  if (std::find(fs.begin(), fs.end(), facet) == fs.end()) {
    throw Error(ErrorCode::kBadSchedule, facet.to_string() + " is not a facet of " + k.to_string());
  }
  if (apex < 1 || apex > VertexSet::kMaxLabel || k.vertices().contains(apex)) {
    throw Error(ErrorCode::kBadSchedule, "apex " + std::to_string(apex) + " is not a fresh label");
  }
  std::vector<VertexSet> out;
  for (VertexSet f : fs) {
    if (f != facet) out.push_back(f);
  }
  for (int v : facet) out.push_back(facet.without(v).with(apex));
  return SimplicialComplex::from_facets(std::max(k.ground_size(), apex), std::move(out));
}

SimplicialComplex truncation_fixture(int n, int k, std::span<const VertexSet> schedule) {
  if (n < 2 || k < 0 || n + 1 + k > VertexSet::kMaxLabel) {
    throw Error(ErrorCode::kBadSchedule, "need n >= 2, k >= 0 and n + 1 + k <= 32");
  }
  if (!schedule.empty() && static_cast<int>(schedule.size()) != k) {
    throw Error(ErrorCode::kBadSchedule, "schedule has " + std::to_string(schedule.size()) + " steps, expected " +
                                             std::to_string(k));
  }
  auto current = SimplicialComplex::boundary_of_simplex(n + 1, VertexSet::ground(n + 1));
  for (int s = 0; s < k; ++s) {
    const int apex = n + 2 + s;
    VertexSet target;
    if (!schedule.empty()) {
      target = schedule[s];
    } else if (s == 0) {
      target = current.facets().front();
    } else {
      for (VertexSet f : current.facets()) {
        if (f.contains(apex - 1)) {
          target = f;
          break;
        }
      }
    }
    current = stellar_subdivide(current, target, apex);
  }
  return current;
}

}  // namespace bier::chordal
