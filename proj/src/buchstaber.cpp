#include "bier/buchstaber.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "bier/error.hpp"

namespace bier::buchstaber {

namespace {

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  return n == 0 ? mpz_class(1) : mpz_class(sign * a[n - 1][n - 1]);
}

std::int64_t reduce(std::int64_t x, int p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t inverse_mod(std::int64_t a, int p) {
  // p is prime: a^(p-2)
  std::int64_t result = 1;
  std::int64_t base = reduce(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Nonzero vectors of Z_p^d whose first nonzero entry is 1.
std::vector<Vector> projective_points(int p, int d) {
  std::vector<Vector> out;
  Vector v(static_cast<std::size_t>(d), 0);
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (std::int64_t code = 1; code < total; ++code) {
    std::int64_t c = code;
    for (int i = 0; i < d; ++i) {
      v[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (*lead == 1) out.push_back(v);
  }
  return out;
}

struct SearchPlan {
  int p = 2;
  int d = 0;
  std::vector<int> order;  // vertex labels, the seed facet first
  std::size_t seeded = 0;  // leading entries pinned to e_1, e_2, ...
  // checks[t]: index lists (into order, each containing t) that must stay independent
  std::vector<std::vector<std::vector<std::size_t>>> checks;
  std::vector<Vector> candidates;
};

SearchPlan plan_search(const SimplicialComplex& l, int p, int d) {
  SearchPlan plan;
  plan.p = p;
  plan.d = d;
  const auto facets = l.facets();
  const VertexSet seed = *std::max_element(facets.begin(), facets.end(),
                                           [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  for (int v : seed) plan.order.push_back(v);
  plan.seeded = plan.order.size();
  VertexSet placed = seed;
  VertexSet pending = l.vertices() - seed;
  while (!pending.empty()) {
    int chosen = 0;
    std::tuple<int, int, int> best{-1, -1, 0};
    for (int v : pending) {
      int touching = 0;
      int degree = 0;
      for (VertexSet f : facets) {
        if (!f.contains(v)) continue;
        ++degree;
        touching += f.intersects(placed) ? 1 : 0;
      }
      const std::tuple<int, int, int> key{touching, degree, -v};
      if (key > best) {
        best = key;
        chosen = v;
      }
    }
    plan.order.push_back(chosen);
    placed = placed.with(chosen);
    pending = pending.without(chosen);
  }

  std::vector<int> position(VertexSet::kMaxLabel + 1, -1);
  for (std::size_t t = 0; t < plan.order.size(); ++t) position[plan.order[t]] = static_cast<int>(t);
  plan.checks.resize(plan.order.size());
  for (std::size_t t = plan.seeded; t < plan.order.size(); ++t) {
    const int v = plan.order[t];
    std::vector<VertexSet> groups;
    for (VertexSet f : facets) {
      if (!f.contains(v)) continue;
      VertexSet assigned;
      for (int u : f) {
        if (position[u] <= static_cast<int>(t)) assigned = assigned.with(u);
      }
      if (assigned.size() >= 2) groups.push_back(assigned);
    }
    std::sort(groups.begin(), groups.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    for (VertexSet g : groups) {
      const bool dominated = std::any_of(groups.begin(), groups.end(), [g](VertexSet h) { return g.proper_subset_of(h); });
      if (dominated) continue;
      std::vector<std::size_t> idx;
      for (int u : g) idx.push_back(static_cast<std::size_t>(position[u]));
      plan.checks[t].push_back(std::move(idx));
    }
  }
  plan.candidates = projective_points(p, d);
  return plan;
}

class Searcher {
 public:
  Searcher(const SearchPlan& plan, std::int64_t budget) : plan_(plan), budget_(budget) {
    assignment_.assign(plan.order.size(), Vector(static_cast<std::size_t>(plan.d), 0));
    for (std::size_t t = 0; t < plan.seeded; ++t) assignment_[t][t] = 1;
  }

  /// Explores the subtree with `first` assigned to the first free position.
  bool run_branch(const Vector& first) {
    const std::size_t t = plan_.seeded;
    assignment_[t] = first;
    ++nodes_;
    return consistent(t) && dfs(t + 1);
  }

  std::int64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }
  const std::vector<Vector>& assignment() const { return assignment_; }

 private:
  bool consistent(std::size_t t) const {
    for (const auto& group : plan_.checks[t]) {
      std::vector<Vector> rows;
      rows.reserve(group.size());
      for (std::size_t i : group) rows.push_back(assignment_[i]);
      if (rank_mod_p(std::move(rows), plan_.p) != static_cast<int>(group.size())) return false;
    }
    return true;
  }

  bool dfs(std::size_t t) {
    if (t == plan_.order.size()) return true;
    for (const Vector& cand : plan_.candidates) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      assignment_[t] = cand;
      if (consistent(t) && dfs(t + 1)) return true;
      if (exceeded_) return false;
    }
    return false;
  }

  const SearchPlan& plan_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<Vector> assignment_;
};

struct BranchOutcome {
  bool found = false;
  bool exceeded = false;
  bool ran = false;
  std::int64_t nodes = 0;
  std::vector<Vector> assignment;
};

enum class Existence { kFound, kNone, kUnknown };

Existence search_rank(const SimplicialComplex& l, int p, int d, const OracleOptions& options, std::int64_t& nodes,
                      CharacteristicMap& certificate) {
  const SearchPlan plan = plan_search(l, p, d);
  auto emit = [&](const std::vector<Vector>& assignment) {
    certificate = CharacteristicMap{d, p, {}};
    for (std::size_t t = 0; t < plan.order.size(); ++t) certificate.vectors[plan.order[t]] = assignment[t];
  };

  if (plan.seeded == plan.order.size()) {
    Searcher s(plan, options.budget);
    emit(s.assignment());
    return Existence::kFound;
  }

  const auto branches = static_cast<int>(plan.candidates.size());
  std::vector<BranchOutcome> outcomes(static_cast<std::size_t>(branches));
  std::atomic<int> winner{branches};
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, options.jobs))
  for (int b = 0; b < branches; ++b) {
    if (b > winner.load()) continue;
    Searcher s(plan, options.budget);
    auto& out = outcomes[static_cast<std::size_t>(b)];
    out.ran = true;
    out.found = s.run_branch(plan.candidates[static_cast<std::size_t>(b)]);
    out.exceeded = s.exceeded();
    out.nodes = s.nodes();
    if (out.found) {
      out.assignment = s.assignment();
      int current = winner.load();
      while (b < current && !winner.compare_exchange_weak(current, b)) {
      }
    }
  }

  // Fold in branch order so the answer and node count do not depend on scheduling.
  for (const auto& out : outcomes) {
    nodes += out.nodes;
    if (out.exceeded) return Existence::kUnknown;
    if (out.found) {
      emit(out.assignment);
      return Existence::kFound;
    }
  }
  return Existence::kNone;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

bool is_unimodular_part(const std::vector<Vector>& rows, int d) {
  const auto r = static_cast<int>(rows.size());
  if (r == 0) return true;
  if (r > d) return false;
  std::vector<int> cols(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cols[static_cast<std::size_t>(i)] = i;
  mpz_class g = 0;
  while (true) {
    std::vector<std::vector<mpz_class>> minor(static_cast<std::size_t>(r), std::vector<mpz_class>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<long>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]);
      }
    }
    const mpz_class det = bareiss_determinant(std::move(minor));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    if (g == 1) return true;
    // next column combination in lexicographic order
    int i = r - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == d - r + i) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
  return false;
}

int rank_mod_p(std::vector<Vector> rows, int p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    for (auto& x : row) x = reduce(x, p);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::int64_t factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = reduce(rows[i][j] - factor * rows[rank][j], p);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

ValidityReport validate_char_map(const SimplicialComplex& k, const CharacteristicMap& map) {
  if (map.modulus != 0 && !is_prime(map.modulus)) {
    throw Error(ErrorCode::kInvalidInput, "modulus must be 0 or a prime, got " + std::to_string(map.modulus));
  }
  for (int v : k.vertices()) {
    const auto it = map.vectors.find(v);
    if (it == map.vectors.end()) {
      throw Error(ErrorCode::kMissingVertexAssignment, "no vector for vertex " + std::to_string(v));
    }
    if (static_cast<int>(it->second.size()) != map.target_rank) {
      throw Error(ErrorCode::kMissingVertexAssignment,
                  "vector for vertex " + std::to_string(v) + " has length " + std::to_string(it->second.size()));
    }
  }
  ValidityReport report;
  report.valid = true;
  for (VertexSet f : k.facets()) {
    std::vector<Vector> rows;
    for (int v : f) rows.push_back(map.vectors.at(v));
    const bool ok = map.modulus == 0 ? is_unimodular_part(rows, map.target_rank)
                                     : rank_mod_p(rows, map.modulus) == static_cast<int>(rows.size());
    report.facets.push_back({f, ok});
    report.valid = report.valid && ok;
  }
  return report;
}

CharacteristicMap phi_map(const BierSphere& b, int modulus) {
  const int m = b.m;
  const int d = m - 1;
  CharacteristicMap phi{d, modulus, {}};
  for (int v : b.complex.vertices()) {
    const int i = v > m ? v - m : v;
    Vector vec(static_cast<std::size_t>(d), 0);
    if (i == m) {
      std::fill(vec.begin(), vec.end(), 1);
    } else {
      vec[static_cast<std::size_t>(i - 1)] = 1;
    }
    phi.vectors[v] = std::move(vec);
  }
  return phi;
}

int buchstaber_formula(const SimplicialComplex& k) {
  const auto fv = f_vector(k);
  return static_cast<int>(fv.at(0) - fv.at(k.ground_size() - 2) + 1);
}

OracleResult s_p_oracle(const SimplicialComplex& l, int p, const OracleOptions& options) {
  if (p != 2 && p != 3) throw Error(ErrorCode::kTooLargeForOracle, "oracle supports p in {2,3}, got " + std::to_string(p));
  const int vertices = l.vertices().size();
  const int facet_size = l.dimension() + 1;
  if (vertices == 0) throw Error(ErrorCode::kNoVertices, "Buchstaber number of a complex without vertices");
  if (vertices > 8 || facet_size > 4) {
    throw Error(ErrorCode::kTooLargeForOracle, std::to_string(vertices) + " vertices, facets of size " +
                                                   std::to_string(facet_size) + " (limits: 8 and 4)");
  }
  OracleResult result;
  for (int d = facet_size; d <= vertices; ++d) {
    CharacteristicMap cert;
    const Existence e = search_rank(l, p, d, options, result.nodes, cert);
    if (e == Existence::kUnknown) {
      result.status = OracleStatus::kBudgetExceeded;
      return result;
    }
    if (e == Existence::kFound) {
      result.value = vertices - d;
      result.target_rank = d;
      result.certificate = std::move(cert);
      return result;
    }
    result.refuted_ranks.push_back(d);
  }
  // Coordinate vectors always work at d = number of vertices.
  throw std::logic_error("mod-p oracle failed to find the coordinate map");
}

BierBuchstaber buchstaber_of_bier(const SimplicialComplex& k, int modulus) {
  if (modulus != 0 && !is_prime(modulus)) {
    throw Error(ErrorCode::kInvalidInput, "modulus must be 0 or a prime, got " + std::to_string(modulus));
  }
  const BierSphere b = bier(k);
  BierBuchstaber out;
  out.value = buchstaber_formula(k);
  out.upper_bound = b.complex.vertices().size() - (b.m - 1);
  out.certificate = phi_map(b, modulus);
  if (!validate_char_map(b.complex, out.certificate).valid) {
    throw std::logic_error("phi is not a characteristic map for Bier of " + k.to_string());
  }
  if (out.value != out.upper_bound) {
    throw std::logic_error("closed form disagrees with the vertex-count bound for " + k.to_string());
  }
  return out;
}

}  // namespace bier::buchstaber
