// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 only
// when every line is PASS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bier/bier_sphere.hpp"
#include "bier/buchstaber.hpp"
#include "bier/chordal.hpp"
#include "bier/coloring.hpp"
#include "bier/error.hpp"
#include "bier/fixtures.hpp"
#include "bier/stacked.hpp"
#include "bier/verify.hpp"
#include "helpers.hpp"

using namespace bier;
using testing::masks;

namespace {

enum class Verdict { kPass, kFail, kSkipped };

struct Outcome {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

// Collects the first few discrepancies and counts the rest.
struct Tally {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::int64_t skipped = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checked << " checks";
    if (skipped) s << ", " << skipped << " skipped";
    if (failures) {
      s << ", " << failures << " failures, first: " << first;
      return {Verdict::kFail, s.str()};
    }
    return {skipped ? Verdict::kSkipped : Verdict::kPass, s.str()};
  }
};

int non_pass = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {Verdict::kFail, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.verdict == Verdict::kPass && seconds > limit_seconds) out.verdict = Verdict::kFail;
  const char* word = out.verdict == Verdict::kPass ? "PASS" : out.verdict == Verdict::kFail ? "FAIL" : "SKIPPED";
  if (out.verdict != Verdict::kPass) ++non_pass;
  std::printf("%-7s %d. %s [%.2f s, limit %.0f s] %s\n", word, id, name.c_str(), seconds, limit_seconds,
              out.detail.c_str());
  std::fflush(stdout);
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent sphere proxies from the facet list alone.
std::string sphere_proxies(int m, const SimplicialComplex& k, const SimplicialComplex& b) {
  const int d = m - 2;
  for (VertexSet f : b.facets()) {
    if (f.size() != d + 1) return "not pure of dimension m-2";
  }
  std::map<oracle::Mask, int> ridges;
  for (VertexSet f : b.facets()) {
    for (int v : f) ++ridges[f.without(v).bits()];
  }
  for (const auto& [r, count] : ridges) {
    if (count != 2) return "ridge in " + std::to_string(count) + " facets";
  }
  const auto faces = oracle::downward_closure(masks(b));
  std::int64_t euler = 0;
  for (oracle::Mask f : faces) {
    if (f) euler += std::popcount(f) % 2 ? 1 : -1;
  }
  if (euler != 1 + (d % 2 ? -1 : 1)) return "Euler characteristic " + std::to_string(euler);
  const auto g = oracle::skeleton_graph(masks(b));
  if (m >= 3) {
    oracle::Mask reached = 1;
    for (bool grew = true; grew;) {
      oracle::Mask next = reached;
      for (int v = 0; v < g.n; ++v) {
        if (reached >> v & 1) next |= g.adj[v];
      }
      grew = next != reached;
      reached = next;
    }
    if (reached != (oracle::Mask{1} << g.n) - 1) return "disconnected";
  }
  const auto fk = f_vector(k);
  if (g.n != m + fk.at(0) - fk.at(m - 2)) return "vertex count " + std::to_string(g.n);
  return "";
}

Outcome fixture_identities() {
  Tally t;
  const std::pair<SimplicialComplex, int> cases[] = {{fixtures::gamma3(), 3}, {fixtures::gamma4(), 4}, {fixtures::g4(), 4},
                                                     {fixtures::gamma5(), 5}, {fixtures::gamma6(), 6}};
  for (const auto& [k, n] : cases) {
    const auto b = bier::bier(k).complex;
    const auto cert = are_isomorphic(b, fixtures::cycle(n));
    t.expect(cert && verify_certificate(b, fixtures::cycle(n), *cert), k.to_string() + " vs Z" + std::to_string(n));
  }
  return t.outcome("Bier of the five complexes on [3] are Z3, Z4, Z4, Z5, Z6");
}

Outcome cross_polytopes() {
  Tally t;
  for (int m = 3; m <= 6; ++m) {
    const auto k = fixtures::simplex(m, m - 1);
    const auto b = bier::bier(k).complex;
    const auto fv = f_vector(b);
    for (int i = -1; i <= m - 2; ++i) {
      t.expect(fv.at(i) == (std::int64_t{1} << (i + 1)) * binomial(m - 1, i + 1),
               "f_" + std::to_string(i) + " at m=" + std::to_string(m));
    }
    // Strip m-3 suspension pairs {i,i'} and land on Z4.
    SimplicialComplex current = b;
    for (int i = 1; i <= m - 3; ++i) {
      SimplicialComplex rest = current;
      const bool ok = coloring::is_suspension_over(current, i, i + m, &rest);
      t.expect(ok, "no suspension along {" + std::to_string(i) + "," + std::to_string(i) + "'} at m=" + std::to_string(m));
      if (!ok) break;
      current = rest;
    }
    t.expect(are_isomorphic(current, fixtures::cycle(4)).has_value(), "residue is not Z4 at m=" + std::to_string(m));
  }
  return t.outcome("m = 3..6");
}

Outcome sphere_checks() {
  Tally t;
  for (int m = 2; m <= 5; ++m) {
    verify::for_each_complex(m, [&](const SimplicialComplex& k) {
      const auto b = bier::bier(k);
      const auto report = check_sphere(b);
      t.expect(report.ok(), "check_sphere " + k.to_string());
      const auto why = sphere_proxies(m, k, b.complex);
      t.expect(why.empty(), why + " for " + k.to_string());
    });
  }
  return t.outcome("4 + 18 + 166 + 7579 complexes");
}

Outcome chromatic_theorem() {
  Tally t;
  for (int m = 2; m <= 5; ++m) {
    const auto closure = m >= 3 ? oracle::min_colorable_closure(m) : std::set<std::vector<oracle::Mask>>{};
    verify::for_each_complex(m, [&](const SimplicialComplex& k) {
      const auto b = bier::bier(k);
      const int chi = coloring::chromatic_number(b.complex).chi;
      const int brute = oracle::chromatic_number(oracle::skeleton_graph(masks(b.complex)));
      t.expect(chi == brute, "DSATUR vs brute force on " + k.to_string());
      t.expect(m - 1 <= chi && chi <= m, "bounds on " + k.to_string());
      if (m < 3) return;
      const bool in_closure = closure.contains(oracle::canonical(m, masks(k)));
      const bool recognized =
          coloring::recognize_min_chromatic_type(b).type != coloring::MinChromaticType::kNone;
      const bool classified = coloring::min_colorable_classifier(k).min_colorable;
      t.expect((chi == m - 1) == in_closure, "chi vs closure on " + k.to_string());
      t.expect((chi == m - 1) == recognized, "chi vs recognizer on " + k.to_string());
      t.expect(classified == in_closure, "classifier vs closure on " + k.to_string());
    });
  }
  return t.outcome("m <= 5, chi vs cone/dual closure vs recognizer");
}

Outcome buchstaber_theorem() {
  Tally t;
  for (int m = 3; m <= 4; ++m) {
    verify::for_each_complex(m, [&](const SimplicialComplex& k) {
      const auto b = bier::bier(k);
      const int formula = buchstaber::buchstaber_formula(k);
      const auto r = buchstaber::s_p_oracle(b.complex, 2);
      if (r.status != buchstaber::OracleStatus::kExact) {
        ++t.skipped;
        return;
      }
      t.expect(r.value == formula, "s_2 = " + std::to_string(r.value) + " on " + k.to_string());
      for (int modulus : {0, 2, 3, 5}) {
        const auto phi = buchstaber::phi_map(b, modulus);
        t.expect(buchstaber::validate_char_map(b.complex, phi).valid,
                 "phi mod " + std::to_string(modulus) + " on " + k.to_string());
        t.expect(b.complex.vertices().size() - phi.target_rank == formula, "phi rank on " + k.to_string());
      }
    });
  }
  return t.outcome("m in {3,4}, p = 2, default budget");
}

Outcome chordal_theorem() {
  Tally t;
  int realized = 0;
  for (int m = 4; m <= 5; ++m) {
    verify::for_each_complex(m, [&](const SimplicialComplex& k) {
      const auto b = bier::bier(k);
      const bool chordal = chordal::is_chordal(b.complex).chordal;
      const bool brute = !oracle::has_induced_long_cycle(oracle::skeleton_graph(masks(b.complex)));
      const bool edgeless = one_skeleton(k).num_edges() == 0 || one_skeleton(b.dual).num_edges() == 0;
      t.expect(chordal == brute, "Lex-BFS vs brute force on " + k.to_string());
      t.expect(chordal == edgeless, "chordal vs edgeless side on " + k.to_string());
      if (!chordal) return;
      const auto r = chordal::realize_stacked(k);
      ++realized;
      std::vector<std::vector<int>> facets;
      for (VertexSet f : r.facets) {
        std::vector<int> idx;
        for (int v : f) idx.push_back(static_cast<int>(std::find(r.labels.begin(), r.labels.end(), v) - r.labels.begin()));
        facets.push_back(idx);
      }
      t.expect(oracle::convex_by_orientation(r.points, facets), "realization not convex for " + k.to_string());
      const auto boundary = SimplicialComplex::from_facets(2 * m, r.facets);
      t.expect(are_isomorphic(boundary, b.complex).has_value(), "boundary differs for " + k.to_string());
    });
  }
  return t.outcome("m in {4,5}, " + std::to_string(realized) + " stacked realizations");
}

Outcome oracle_cross_checks() {
  Tally t;
  std::mt19937_64 rng(2024);

  // Graph pool: every Bier 1-skeleton with m <= 5 plus random graphs on up to 10 vertices.
  std::vector<SimplicialComplex> pool;
  for (int m = 2; m <= 5; ++m) {
    verify::for_each_complex(m, [&](const SimplicialComplex& k) { pool.push_back(skeleton(bier::bier(k).complex, 1)); });
  }
  for (int i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::bernoulli_distribution edge(0.1 + 0.1 * (i % 9));
    std::vector<VertexSet> gens;
    for (int v = 1; v <= n; ++v) gens.push_back({v});
    for (int a = 1; a <= n; ++a) {
      for (int c = a + 1; c <= n; ++c) {
        if (edge(rng)) gens.push_back({a, c});
      }
    }
    pool.push_back(SimplicialComplex::from_facets(n, gens));
  }
  for (const auto& g : pool) {
    const auto graph = oracle::skeleton_graph(masks(g));
    t.expect(coloring::chromatic_number(g).chi == oracle::chromatic_number(graph), "chi on " + g.to_string());
    t.expect(chordal::is_chordal(g).chordal == !oracle::has_induced_long_cycle(graph), "chordal on " + g.to_string());
  }

  // Random integer maps on Bier spheres with m <= 4.
  std::vector<BierSphere> spheres;
  for (int m = 2; m <= 4; ++m) {
    verify::for_each_complex(m, [&](const SimplicialComplex& k) { spheres.push_back(bier::bier(k)); });
  }
  std::uniform_int_distribution<std::int64_t> entry(-2, 2);
  int integer_valid = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& b = spheres[rng() % spheres.size()];
    buchstaber::CharacteristicMap map;
    map.target_rank = b.m - 1;
    if (i % 2 == 0) {
      for (int v : b.complex.vertices()) {
        buchstaber::Vector vec(map.target_rank);
        for (auto& x : vec) x = entry(rng);
        map.vectors[v] = vec;
      }
    } else {
      // phi under a random shear x_a += c * x_b keeps validity; then maybe break one vertex.
      map = buchstaber::phi_map(b, 0);
      const int d = map.target_rank;
      for (int step = 0; step < 4 && d > 1; ++step) {
        const int a = static_cast<int>(rng() % d);
        const int c = (a + 1 + static_cast<int>(rng() % (d - 1))) % d;
        const std::int64_t factor = entry(rng);
        for (auto& [v, vec] : map.vectors) vec[a] += factor * vec[c];
      }
      if (rng() % 3 == 0) {
        auto it = map.vectors.begin();
        std::advance(it, rng() % map.vectors.size());
        for (auto& x : it->second) x = entry(rng);
      }
    }
    const auto over_z = buchstaber::validate_char_map(b.complex, map);
    // Per-facet oracle over Z.
    bool oracle_z = true;
    for (VertexSet f : b.complex.facets()) {
      std::vector<std::vector<std::int64_t>> rows;
      for (int v : f) rows.push_back(map.vectors.at(v));
      oracle_z = oracle_z && oracle::unimodular(rows, map.target_rank);
    }
    t.expect(over_z.valid == oracle_z, "integer validity vs minors on map " + std::to_string(i));
    if (!over_z.valid) continue;
    ++integer_valid;
    for (int p : {2, 3, 5}) {
      auto mod = map;
      mod.modulus = p;
      t.expect(buchstaber::validate_char_map(b.complex, mod).valid,
               "valid over Z but not mod " + std::to_string(p) + " on map " + std::to_string(i));
    }
  }
  return t.outcome(std::to_string(pool.size()) + " graphs, 10^4 random maps (" + std::to_string(integer_valid) +
                   " integer-valid)");
}

Outcome determinism() {
  Tally t;
  auto report = [](verify::TheoremId id, int m, int jobs, std::int64_t sample) {
    verify::VerifyOptions o;
    o.jobs = jobs;
    o.sample = sample;
    o.seed = 17;
    return verify::to_json(verify::verify_theorem(id, m, o)).dump(2);
  };
  for (auto id : verify::all_theorems()) {
    for (int m = 4; m <= 5; ++m) {
      const auto one = report(id, m, 1, 0);
      t.expect(one == report(id, m, 2, 0), std::string(verify::to_string(id)) + " m=" + std::to_string(m) + " jobs 2");
      t.expect(one == report(id, m, 8, 0), std::string(verify::to_string(id)) + " m=" + std::to_string(m) + " jobs 8");
    }
    const auto one = report(id, 6, 1, 300);
    t.expect(one == report(id, 6, 2, 300), std::string(verify::to_string(id)) + " m=6 jobs 2");
    t.expect(one == report(id, 6, 8, 300), std::string(verify::to_string(id)) + " m=6 jobs 8");
  }
  return t.outcome("every theorem at m = 4, 5 and a seeded m = 6 sample, jobs 1/2/8");
}

Outcome truncation_types() {
  Tally t;
  // Counts of stacked 3-polytopes with 4..7 vertices.
  const std::size_t expected[] = {1, 1, 1, 3};
  for (int k = 0; k <= 3; ++k) {
    std::vector<std::vector<VertexSet>> schedules{{}};
    for (int step = 0; step < k; ++step) {
      std::vector<std::vector<VertexSet>> next;
      for (const auto& s : schedules) {
        const auto current = chordal::truncation_fixture(3, step, s);
        for (VertexSet f : current.facets()) {
          auto grown = s;
          grown.push_back(f);
          next.push_back(grown);
        }
      }
      schedules = next;
    }
    std::set<std::vector<oracle::Mask>> types;
    for (const auto& s : schedules) types.insert(oracle::canonical(4 + k, masks(chordal::truncation_fixture(3, k, s))));
    t.expect(types.size() == expected[k], "k=" + std::to_string(k) + " gives " + std::to_string(types.size()));
  }
  return t.outcome("vc^k(Delta^3), k = 0..3");
}

}  // namespace

int main() {
  criterion(1, "fixture identities", 1, fixture_identities);
  criterion(2, "cross-polytopes", 1, cross_polytopes);
  criterion(3, "sphere checks", 60, sphere_checks);
  criterion(4, "chromatic theorem", 300, chromatic_theorem);
  criterion(5, "Buchstaber theorem", 1800, buchstaber_theorem);
  criterion(6, "chordality theorem", 120, chordal_theorem);
  criterion(7, "oracle cross-checks", 600, oracle_cross_checks);
  criterion(8, "determinism", 600, determinism);
  criterion(9, "truncation polytope types", 60, truncation_types);
  return non_pass == 0 ? 0 : 1;
}
