#include "bier/coloring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "bier/error.hpp"
#include "bier/fixtures.hpp"
#include "bier/isomorphism.hpp"

namespace bier::coloring {

namespace {

constexpr int kLabels = VertexSet::kMaxLabel + 1;

int greedy_clique_size(const Graph& g) {
  std::vector<int> order = g.vertices.labels();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int best = 0;
  for (int start : order) {
    VertexSet clique = VertexSet::singleton(start);
    VertexSet candidates = g.neighbors[start];
    for (int v : order) {
      if (candidates.contains(v)) {
        clique = clique.with(v);
        candidates = candidates & g.neighbors[v];
      }
    }
    best = std::max(best, clique.size());
  }
  return best;
}

class Dsatur {
 public:
  explicit Dsatur(const Graph& g) : g_(g), n_(g.vertices.size()) {
    color_.fill(-1);
    for (auto& row : seen_) row.fill(0);
  }

  ChromaticResult solve() {
    lower_ = greedy_clique_size(g_);
    best_ = n_ + 1;
    greedy();
    if (best_ > lower_) branch(0, 0);
    ChromaticResult out;
    out.chi = best_;
    out.coloring.num_colors = best_;
    out.coloring.color_of.assign(kLabels, -1);
    for (int v : g_.vertices) out.coloring.color_of[v] = best_color_[v];
    return out;
  }

 private:
  int saturation(int v) const {
    int s = 0;
    for (int c = 0; c < kLabels; ++c) s += seen_[v][c] > 0 ? 1 : 0;
    return s;
  }

  // Uncolored vertex with the largest saturation, then largest uncolored degree, then smallest label.
  int pick() const {
    int chosen = 0;
    std::tuple<int, int, int> best{-1, -1, 0};
    for (int v : g_.vertices) {
      if (color_[v] >= 0) continue;
      int open_degree = 0;
      for (int u : g_.neighbors[v]) open_degree += color_[u] < 0 ? 1 : 0;
      const std::tuple<int, int, int> key{saturation(v), open_degree, -v};
      if (key > best) {
        best = key;
        chosen = v;
      }
    }
    return chosen;
  }

  void assign(int v, int c) {
    color_[v] = c;
    for (int u : g_.neighbors[v]) ++seen_[u][c];
  }
  void unassign(int v) {
    const int c = color_[v];
    for (int u : g_.neighbors[v]) --seen_[u][c];
    color_[v] = -1;
  }

  void greedy() {
    std::vector<int> done;
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const int v = pick();
      int c = 0;
      while (seen_[v][c] > 0) ++c;
      used = std::max(used, c + 1);
      assign(v, c);
      done.push_back(v);
    }
    best_ = used;
    best_color_ = color_;
    for (auto it = done.rbegin(); it != done.rend(); ++it) unassign(*it);
  }

  void branch(int colored, int used) {
    if (best_ == lower_ || used >= best_) return;
    if (colored == n_) {
      best_ = used;
      best_color_ = color_;
      return;
    }
    const int v = pick();
    for (int c = 0; c < used; ++c) {
      if (seen_[v][c] > 0) continue;
      assign(v, c);
      branch(colored + 1, used);
      unassign(v);
      if (best_ == lower_ || used >= best_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      branch(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  int lower_ = 0;
  int best_ = 0;
  std::array<int, kLabels> color_{};
  std::array<int, kLabels> best_color_{};
  std::array<std::array<int, kLabels>, kLabels> seen_{};
};

std::vector<VertexSet> facets_through(const SimplicialComplex& k, int v) {
  std::vector<VertexSet> out;
  for (VertexSet f : k.facets()) {
    if (f.contains(v)) out.push_back(f.without(v));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

struct ClosureEntry {
  SimplicialComplex representative;
  std::vector<std::string> trace;
};
using ClosureLevel = std::map<std::vector<VertexSet::Mask>, ClosureEntry>;

void add_with_dual(ClosureLevel& level, const SimplicialComplex& k, std::vector<std::string> trace) {
  auto key = canonical_form(k);
  if (!level.contains(key)) level.emplace(std::move(key), ClosureEntry{k, trace});
  const auto dual = alexander_dual(k);
  auto dual_key = canonical_form(dual);
  if (!level.contains(dual_key)) {
    trace.emplace_back("dual");
    level.emplace(std::move(dual_key), ClosureEntry{dual, std::move(trace)});
  }
}

// Level m holds the closure restricted to ground sets of size m; built once, then read-only.
const ClosureLevel& closure_level(int m) {
  static std::mutex guard;
  static std::vector<ClosureLevel> levels;
  std::lock_guard lock(guard);
  if (levels.empty()) {
    ClosureLevel base;
    add_with_dual(base, fixtures::gamma4(), {"gamma4"});
    add_with_dual(base, fixtures::g4(), {"g4"});
    add_with_dual(base, fixtures::gamma6(), {"gamma6"});
    levels.push_back(std::move(base));
  }
  while (static_cast<int>(levels.size()) < m - 2) {
    const int next_m = static_cast<int>(levels.size()) + 3;
    ClosureLevel next;
    for (const auto& [key, entry] : levels.back()) {
      auto coned = cone(entry.representative, next_m);
      auto trace = entry.trace;
      trace.emplace_back("cone");
      add_with_dual(next, coned, std::move(trace));
    }
    levels.push_back(std::move(next));
  }
  return levels[static_cast<std::size_t>(m - 3)];
}

bool is_cycle(const SimplicialComplex& k) {
  if (k.dimension() != 1 || !k.is_pure()) return false;
  const Graph g = one_skeleton(k);
  for (int v : g.vertices) {
    if (g.degree(v) != 2) return false;
  }
  // connected: walk from the smallest vertex
  VertexSet seen = VertexSet::singleton(g.vertices.min_label());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next = next | g.neighbors[v];
    frontier = next - seen;
    seen = seen | next;
  }
  return seen == g.vertices;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.num_colors < 0) return false;
  std::vector<bool> hit(static_cast<std::size_t>(c.num_colors), false);
  for (int v : g.vertices) {
    if (static_cast<std::size_t>(v) >= c.color_of.size()) return false;
    const int col = c.color_of[v];
    if (col < 0 || col >= c.num_colors) return false;
    hit[static_cast<std::size_t>(col)] = true;
    for (int u : g.neighbors[v]) {
      if (c.color_of[u] == col) return false;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.vertices.empty()) throw Error(ErrorCode::kNoVertices, "chromatic number of a graph without vertices");
  return Dsatur(g).solve();
}

ChromaticResult chromatic_number(const SimplicialComplex& k) { return chromatic_number(one_skeleton(k)); }

int chi_or_zero(const SimplicialComplex& k) { return k.vertices().empty() ? 0 : chromatic_number(k).chi; }

BierBounds chi_bier_bounds(const SimplicialComplex& k) {
  const BierSphere b = bier(k);
  const int m = b.m;
  BierBounds out;
  out.lower = std::max({m - 1, chi_or_zero(b.base), chi_or_zero(b.dual)});
  out.upper = m;
  // i and i' share color i; compress to the colors that actually occur.
  std::vector<int> compressed(static_cast<std::size_t>(m) + 1, -1);
  int next = 0;
  out.upper_witness.color_of.assign(kLabels, -1);
  for (int v : b.complex.vertices()) {
    const int i = v > m ? v - m : v;
    if (compressed[i] < 0) compressed[i] = next++;
    out.upper_witness.color_of[v] = compressed[i];
  }
  out.upper_witness.num_colors = next;
  return out;
}

VertexSet weak_cone_apexes(const SimplicialComplex& k) {
  const Graph g = one_skeleton(k);
  VertexSet out;
  for (int v : g.vertices) {
    if (g.neighbors[v] == g.vertices.without(v)) out = out.with(v);
  }
  return out;
}

VertexSet cone_apexes(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  VertexSet common = k.vertices();
  for (VertexSet f : k.facets()) common = common & f;
  return common;
}

const char* to_string(SuspensionKind kind) {
  switch (kind) {
    case SuspensionKind::kNotWeakSuspension: return "NotWeakSuspension";
    case SuspensionKind::kWeakSuspensionOnly: return "WeakSuspensionOnly";
    case SuspensionKind::kSuspension: return "Suspension";
  }
  return "?";
}

bool is_suspension_over(const SimplicialComplex& k, int a, int b, SimplicialComplex* rest) {
  if (a == b || !k.vertices().contains(a) || !k.vertices().contains(b)) return false;
  for (VertexSet f : k.facets()) {
    if (f.contains(a) == f.contains(b)) return false;
  }
  auto through_a = facets_through(k, a);
  if (through_a != facets_through(k, b)) return false;
  if (rest != nullptr) *rest = SimplicialComplex::from_facets(k.ground_size(), std::move(through_a));
  return true;
}

SuspensionStructure suspension_structure(const SimplicialComplex& k) {
  const Graph g = one_skeleton(k);
  SuspensionStructure s;
  for (int a : g.vertices) {
    const VertexSet others = g.vertices.without(a);
    for (int b : g.vertices) {
      if (b <= a || g.adjacent(a, b)) continue;
      const VertexSet rest = others.without(b);
      if (g.neighbors[a] == rest && g.neighbors[b] == rest) {
        s.pairs.emplace_back(a, b);
        if (is_suspension_over(k, a, b)) s.suspension_pairs.emplace_back(a, b);
      }
    }
  }
  if (!s.suspension_pairs.empty()) {
    s.kind = SuspensionKind::kSuspension;
  } else if (!s.pairs.empty()) {
    s.kind = SuspensionKind::kWeakSuspensionOnly;
  }
  return s;
}

SuspensionStructure suspension_structure(const BierSphere& b) { return suspension_structure(b.complex); }

MinColorableResult min_colorable_classifier(const SimplicialComplex& k) {
  const int m = k.ground_size();
  if (m < 3 || m > 8) throw Error(ErrorCode::kBadM, "classifier covers 3 <= m <= 8, got m=" + std::to_string(m));
  if (k.is_full_simplex()) throw Error(ErrorCode::kDualOfFullSimplex, "K must differ from the full simplex");
  const auto& level = closure_level(m);
  const auto it = level.find(canonical_form(k));
  if (it == level.end()) return {};
  return {true, it->second.trace};
}

const char* to_string(MinChromaticType type) {
  switch (type) {
    case MinChromaticType::kNone: return "None";
    case MinChromaticType::kCube: return "Cube";
    case MinChromaticType::kCubeTimesHexagon: return "CubeTimesHexagon";
  }
  return "?";
}

MinChromaticRecognition recognize_min_chromatic_type(const BierSphere& b) {
  MinChromaticRecognition out;
  SimplicialComplex current = b.complex;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i = 1; i <= b.m; ++i) {
      SimplicialComplex rest = current;
      if (is_suspension_over(current, i, b.primed(i), &rest)) {
        out.stripped.emplace_back(i, b.primed(i));
        current = std::move(rest);
        stripped = true;
        break;
      }
    }
  }
  out.residue_vertices = current.vertices().size();
  out.residue_dimension = current.dimension();
  if (current.is_void() || (out.residue_dimension == 0 && out.residue_vertices == 2)) {
    out.type = MinChromaticType::kCube;
  } else if (is_cycle(current) && out.residue_vertices == 4) {
    out.type = MinChromaticType::kCube;
  } else if (is_cycle(current) && out.residue_vertices == 6) {
    out.type = MinChromaticType::kCubeTimesHexagon;
  }
  return out;
}

}  // namespace bier::coloring
