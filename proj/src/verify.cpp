#include "bier/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <set>

#include "bier/bier_sphere.hpp"
#include "bier/buchstaber.hpp"
#include "bier/chordal.hpp"
#include "bier/coloring.hpp"
#include "bier/error.hpp"
#include "bier/io.hpp"
#include "bier/isomorphism.hpp"
#include "bier/stacked.hpp"

namespace bier::verify {

namespace {

constexpr int kMaxEnumerationM = 6;
constexpr std::int64_t kDefaultSample = 100'000;
constexpr std::size_t kListedFailures = 1000;

void check_m(int m) {
  if (m > kMaxEnumerationM) {
    throw Error(ErrorCode::kMTooLarge, "enumeration covers m <= 6, got m=" + std::to_string(m));
  }
  if (m < 2) throw Error(ErrorCode::kBadM, "enumeration needs m >= 2, got m=" + std::to_string(m));
}

// Subsets of [m] as masks 0..2^m-1; with m <= 6 a family of them fits in one word.
struct Lattice {
  int m = 0;
  int n = 0;
  std::array<std::uint64_t, 64> comparable{};  // masks comparable with subset j

  explicit Lattice(int m_) : m(m_), n(1 << m_) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if ((a & b) == a || (a & b) == b) comparable[a] |= std::uint64_t{1} << b;
      }
    }
  }

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

using RawVisitor = std::function<void(const std::vector<int>&)>;

// Emits `chosen` (unless excluded) and, when `deep`, every extension by masks above `next`.
void walk(const Lattice& lattice, const RawVisitor& visit, std::vector<int>& chosen, std::uint64_t forbidden,
          int next, bool deep) {
  const bool excluded = chosen.empty() || (chosen.size() == 1 && chosen[0] == lattice.n - 1);
  if (!excluded) visit(chosen);
  if (!deep) return;
  std::uint64_t candidates = ~forbidden & lattice.all();
  candidates &= next >= 64 ? 0 : ~std::uint64_t{0} << next;
  while (candidates) {
    const int j = std::countr_zero(candidates);
    candidates &= candidates - 1;
    chosen.push_back(j);
    walk(lattice, visit, chosen, forbidden | lattice.comparable[j], j + 1, true);
    chosen.pop_back();
  }
}

SimplicialComplex build(const Lattice& lattice, const std::vector<int>& chosen) {
  std::vector<VertexSet> facets;
  facets.reserve(chosen.size());
  for (int j : chosen) facets.emplace_back(static_cast<VertexSet::Mask>(j));
  return SimplicialComplex::from_facets(lattice.m, std::move(facets));
}

void run_task_raw(const Lattice& lattice, const Task& task, const RawVisitor& visit) {
  std::uint64_t forbidden = 0;
  std::vector<int> chosen;
  for (int j : task.prefix) {
    chosen.push_back(j);
    forbidden |= lattice.comparable[j];
  }
  const int next = chosen.empty() ? 0 : chosen.back() + 1;
  walk(lattice, visit, chosen, forbidden, next, task.subtree);
}

void run_task(const Lattice& lattice, const Task& task, const Visitor& visit) {
  run_task_raw(lattice, task, [&](const std::vector<int>& chosen) { visit(build(lattice, chosen)); });
}

void collect_tasks(const Lattice& lattice, std::vector<int>& prefix, std::uint64_t forbidden, int next, int depth,
                   std::vector<Task>& out) {
  if (static_cast<int>(prefix.size()) == depth) {
    out.push_back({prefix, true});
    return;
  }
  out.push_back({prefix, false});
  std::uint64_t candidates = ~forbidden & lattice.all();
  candidates &= next >= 64 ? 0 : ~std::uint64_t{0} << next;
  while (candidates) {
    const int j = std::countr_zero(candidates);
    candidates &= candidates - 1;
    prefix.push_back(j);
    collect_tasks(lattice, prefix, forbidden | lattice.comparable[j], j + 1, depth, out);
    prefix.pop_back();
  }
}

// ---- per-theorem checks ----------------------------------------------------

class Diagnostics {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!text_.empty()) text_ += "; ";
      text_ += what;
    }
  }
  std::string take() { return std::move(text_); }

 private:
  std::string text_;
};

void check_sphere_theorem(const SimplicialComplex& k, Diagnostics& d) {
  const auto report = check_sphere(bier(k));
  for (const auto& f : report.failures) d.expect(false, f);
}

// Bier(K) ∩ 2^([m-1] ⊔ [(m-1)']) relabelled onto [2(m-1)].
SimplicialComplex bier_restricted(const BierSphere& b) {
  const int m = b.m;
  const VertexSet keep = VertexSet::range(1, m - 1) | VertexSet::range(m + 1, 2 * m - 1);
  std::vector<int> image(static_cast<std::size_t>(2 * m) + 1, 0);
  for (int i = 1; i < m; ++i) image[i + m] = i + m - 1;
  return relabel(full_subcomplex(b.complex, keep), image, 2 * (m - 1));
}

void check_chromatic_theorem(const SimplicialComplex& k, Diagnostics& d) {
  const int m = k.ground_size();
  const auto b = bier(k);
  const auto chi = coloring::chromatic_number(b.complex);
  const auto bounds = coloring::chi_bier_bounds(k);
  const Graph g = one_skeleton(b.complex);
  d.expect(coloring::is_proper(g, chi.coloring) && chi.coloring.num_colors == chi.chi, "chromatic witness invalid");
  d.expect(coloring::is_proper(g, bounds.upper_witness), "upper-bound coloring invalid");
  d.expect(m - 1 <= chi.chi && chi.chi <= m, "chi(Bier)=" + std::to_string(chi.chi) + " outside [m-1, m]");
  d.expect(bounds.lower <= chi.chi && chi.chi <= bounds.upper,
           "chi(Bier)=" + std::to_string(chi.chi) + " outside (" + std::to_string(bounds.lower) + ", " +
               std::to_string(bounds.upper) + ")");

  const bool minimal = chi.chi == m - 1;
  const auto type = coloring::recognize_min_chromatic_type(b);
  d.expect(minimal == (type.type != coloring::MinChromaticType::kNone),
           std::string("recognizer says ") + coloring::to_string(type.type) + " but chi=" + std::to_string(chi.chi));
  if (m >= 3) {
    const bool classified = coloring::min_colorable_classifier(k).min_colorable;
    d.expect(minimal == classified,
             std::string("classifier says ") + (classified ? "min-colorable" : "not min-colorable") +
                 " but chi=" + std::to_string(chi.chi));
  }

  const auto s = coloring::suspension_structure(b);
  if (s.kind == coloring::SuspensionKind::kWeakSuspensionOnly) {
    d.expect(chi.chi == m, "weak suspension that is not a suspension has chi < m");
  }
  if (m >= 4 && minimal && k.vertices().size() == m && b.dual.vertices().size() == m) {
    d.expect(s.kind != coloring::SuspensionKind::kNotWeakSuspension,
             "chi = m-1 with no ghosts on either side, yet not a weak suspension");
  }
  for (auto [i, j] : s.suspension_pairs) {
    SimplicialComplex rest = b.complex;
    coloring::is_suspension_over(b.complex, i, j, &rest);
    const int below = coloring::chi_or_zero(rest);
    d.expect(chi.chi == below + 1, "suspension over {" + std::to_string(i) + "," + std::to_string(j) +
                                       "} does not raise chi by one");
  }

  if (m >= 3) {
    const bool is_cone = coloring::cone_apexes(k).contains(m);
    const auto l = relabel(full_subcomplex(k, VertexSet::ground(m - 1)), {}, m - 1);
    bool restricted_matches = false;
    if (!l.is_full_simplex()) restricted_matches = bier(l).complex == bier_restricted(b);
    d.expect(is_cone == restricted_matches, std::string("cone apex m is ") + (is_cone ? "present" : "absent") +
                                                " but the restriction of Bier(K) " +
                                                (restricted_matches ? "equals" : "differs from") + " Bier(L)");
  }
}

void check_buchstaber_theorem(const SimplicialComplex& k, const VerifyOptions& options, Diagnostics& d,
                              bool& skipped) {
  const int m = k.ground_size();
  const auto b = bier(k);
  const int formula = buchstaber::buchstaber_formula(k);
  for (int modulus : {0, 2, 3, 5}) {
    const auto report = buchstaber::validate_char_map(b.complex, buchstaber::phi_map(b, modulus));
    d.expect(report.valid, "phi fails over modulus " + std::to_string(modulus));
  }
  const auto result = buchstaber::buchstaber_of_bier(k, 0);
  d.expect(result.value == formula, "buchstaber_of_bier disagrees with the formula");
  const int f0 = b.complex.vertices().size();
  d.expect(formula <= f0 - (m - 1), "formula exceeds the dimension bound");
  const int chi = coloring::chromatic_number(b.complex).chi;
  d.expect(f0 - chi <= formula, "f0 - chi exceeds the formula");

  if (options.oracle) {
    buchstaber::OracleOptions oo;
    oo.budget = options.budget;
    oo.jobs = 1;
    try {
      const auto r = buchstaber::s_p_oracle(b.complex, options.p, oo);
      if (r.status == buchstaber::OracleStatus::kBudgetExceeded) {
        skipped = true;
      } else {
        d.expect(r.value == formula, "s_" + std::to_string(options.p) + " oracle = " + std::to_string(r.value) +
                                         ", formula = " + std::to_string(formula));
        d.expect(buchstaber::validate_char_map(b.complex, r.certificate).valid, "oracle certificate invalid");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLargeForOracle) throw;
      skipped = true;
    }
  }
}

void check_chordal_theorem(const SimplicialComplex& k, Diagnostics& d) {
  const int m = k.ground_size();
  const auto b = bier(k);
  const Graph g = one_skeleton(b.complex);
  const auto report = chordal::is_chordal(g);
  if (report.chordal) {
    d.expect(chordal::is_perfect_elimination_order(g, report.elimination_order), "elimination order invalid");
  } else {
    d.expect(chordal::is_induced_cycle(g, report.induced_cycle), "induced-cycle witness invalid");
  }
  const auto cls = chordal::classify_chordal_bier(k);
  d.expect(cls.chordal == report.chordal, "classification disagrees with the graph test");
  if (m >= 4) {
    const bool edgeless = one_skeleton(k).num_edges() == 0 || one_skeleton(b.dual).num_edges() == 0;
    d.expect(report.chordal == edgeless, std::string("Bier(K) is ") + (report.chordal ? "" : "not ") +
                                             "chordal but edgeless side " + (edgeless ? "exists" : "is missing"));
  }
  if (!cls.chordal) return;
  const auto r = chordal::realize_stacked(k);
  d.expect(chordal::verify_convex_position(r), "realization not in convex position");
  d.expect(static_cast<int>(r.labels.size()) == m + cls.k, "realization vertex count differs from m + k");
  d.expect(static_cast<int>(r.provenance.size()) == cls.k, "stellar step count differs from k");
  const auto realized = SimplicialComplex::from_facets(2 * m, r.facets);
  d.expect(are_isomorphic(realized, b.complex).has_value(), "realization not isomorphic to Bier(K)");
}

void check_symmetry_theorem(const SimplicialComplex& k, Diagnostics& d) {
  const auto dual = alexander_dual(k);
  d.expect(alexander_dual(dual) == k, "double dual differs from K");
  const auto cert = bier_symmetry_witness(k);
  d.expect(verify_certificate(bier(k).complex, bier(dual).complex, cert), "swap is not an isomorphism");
}

void check_suspension_theorem(const SimplicialComplex& k, Diagnostics& d) {
  const int m = k.ground_size();
  const auto b = bier(k);
  const auto s = coloring::suspension_structure(b);
  const VertexSet weak_k = coloring::weak_cone_apexes(k);
  const VertexSet weak_d = coloring::weak_cone_apexes(b.dual);
  const VertexSet cones = coloring::cone_apexes(k);
  std::set<std::pair<int, int>> pairs(s.pairs.begin(), s.pairs.end());
  std::set<std::pair<int, int>> susp(s.suspension_pairs.begin(), s.suspension_pairs.end());
  // A pair other than {i,i'} only occurs on the boundary of the (m-1)-cross-polytope,
  // where every antipodal pair is a suspension pair and, for m >= 3, some {i,i'} is among them.
  const bool foreign = std::ranges::any_of(pairs, [m](auto pr) { return pr.second != pr.first + m; });
  if (foreign) {
    const bool cross = b.complex.vertices().size() == 2 * (m - 1) &&
                       b.complex.facets().size() == (std::size_t{1} << (m - 1)) &&
                       coloring::recognize_min_chromatic_type(b).type == coloring::MinChromaticType::kCube;
    d.expect(cross, "weak-suspension pair not of the form {i,i'} outside the cross-polytope");
    d.expect(pairs == susp, "cross-polytope pair that is not a suspension pair");
    d.expect(m < 3 || std::ranges::any_of(pairs, [m](auto pr) { return pr.second == pr.first + m; }),
             "no pair of the form {i,i'}");
  }
  for (int i = 1; i <= m; ++i) {
    const bool weak = pairs.contains({i, i + m});
    d.expect(weak == (weak_k.contains(i) && weak_d.contains(i)),
             "pair {" + std::to_string(i) + "," + std::to_string(i) + "'} weak witness mismatch with weak-cone apexes");
    const bool full = susp.contains({i, i + m});
    d.expect(full == cones.contains(i),
             "pair {" + std::to_string(i) + "," + std::to_string(i) + "'} suspension mismatch with cone apexes");
  }
  d.expect(std::ranges::includes(pairs, susp), "suspension pair missing from weak pairs");
}

// ---- driver ---------------------------------------------------------------

struct TaskResult {
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::vector<Failure> failures;

  void add(TheoremId id, const SimplicialComplex& k, const VerifyOptions& options) {
    const auto outcome = check_complex(id, k, options);
    ++checked;
    if (outcome.skipped) ++skipped;
    if (!outcome.failure.empty()) failures.push_back({k, outcome.failure});
  }
};

}  // namespace

std::int64_t expected_count(int m) {
  static constexpr std::array<std::int64_t, 7> dedekind{2, 3, 6, 20, 168, 7581, 7828354};
  check_m(m);
  return dedekind[m] - 2;
}

std::vector<Task> partition(int m, int depth) {
  check_m(m);
  const Lattice lattice(m);
  std::vector<Task> out;
  std::vector<int> prefix;
  collect_tasks(lattice, prefix, 0, 0, depth, out);
  return out;
}

void for_each_in_task(int m, const Task& task, const Visitor& visit) {
  check_m(m);
  run_task(Lattice(m), task, visit);
}

void for_each_complex(int m, const Visitor& visit) { for_each_in_task(m, Task{{}, true}, visit); }

std::vector<SimplicialComplex> enumerate_complexes(int m) {
  std::vector<SimplicialComplex> out;
  for_each_complex(m, [&](const SimplicialComplex& k) { out.push_back(k); });
  return out;
}

std::int64_t count_complexes(int m, int jobs) {
  const auto tasks = partition(m);
  const Lattice lattice(m);
  std::vector<std::int64_t> counts(tasks.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs))
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    run_task_raw(lattice, tasks[t], [&](const std::vector<int>&) { ++counts[t]; });
  }
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kSphere: return "sphere";
    case TheoremId::kChromatic: return "chromatic";
    case TheoremId::kBuchstaber: return "buchstaber";
    case TheoremId::kChordal: return "chordal";
    case TheoremId::kSymmetry: return "symmetry";
    case TheoremId::kSuspension: return "suspension";
  }
  return "?";
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids{TheoremId::kSphere,   TheoremId::kChromatic, TheoremId::kBuchstaber,
                                          TheoremId::kChordal,  TheoremId::kSymmetry,  TheoremId::kSuspension};
  return ids;
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (auto id : all_theorems()) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

CheckOutcome check_complex(TheoremId id, const SimplicialComplex& k, const VerifyOptions& options) {
  CheckOutcome out;
  Diagnostics d;
  try {
    switch (id) {
      case TheoremId::kSphere: check_sphere_theorem(k, d); break;
      case TheoremId::kChromatic: check_chromatic_theorem(k, d); break;
      case TheoremId::kBuchstaber: check_buchstaber_theorem(k, options, d, out.skipped); break;
      case TheoremId::kChordal: check_chordal_theorem(k, d); break;
      case TheoremId::kSymmetry: check_symmetry_theorem(k, d); break;
      case TheoremId::kSuspension: check_suspension_theorem(k, d); break;
    }
  } catch (const std::exception& e) {
    d.expect(false, std::string("exception: ") + e.what());
  }
  out.failure = d.take();
  return out;
}

TheoremReport verify_theorem(TheoremId id, int m, const VerifyOptions& options_in) {
  check_m(m);
  VerifyOptions options = options_in;
  if (options.jobs < 1) throw Error(ErrorCode::kInvalidInput, "jobs must be positive");
  if (options.sample < 0) throw Error(ErrorCode::kInvalidInput, "sample must be non-negative");
  if (options.oracle && options.p != 2 && options.p != 3) {
    throw Error(ErrorCode::kInvalidInput, "oracle supports p in {2,3}");
  }
  if (m == kMaxEnumerationM && !options.full && options.sample == 0) options.sample = kDefaultSample;
  if (m == kMaxEnumerationM && options.full && options.sample == 0 && options.up_to_iso) {
    throw Error(ErrorCode::kInvalidInput, "--up-to-iso over the full m=6 space is not supported; use --sample");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto tasks = partition(m);
  const Lattice lattice(m);
  const int jobs = options.jobs;

  // Global enumeration indices selected by the seeded subsample.
  std::vector<std::int64_t> offsets(tasks.size() + 1, 0);
  std::vector<std::int64_t> selected;
  const bool sampling = options.sample > 0;
  if (sampling) {
    std::vector<std::int64_t> counts(tasks.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      run_task_raw(lattice, tasks[t], [&](const std::vector<int>&) { ++counts[t]; });
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) offsets[t + 1] = offsets[t] + counts[t];
    // Selection sampling: each index is kept with probability needed / remaining.
    std::mt19937_64 rng(options.seed);
    const std::int64_t total = offsets.back();
    std::int64_t needed = std::min(options.sample, total);
    selected.reserve(static_cast<std::size_t>(needed));
    for (std::int64_t i = 0; i < total && needed > 0; ++i) {
      if (std::uniform_int_distribution<std::int64_t>(0, total - i - 1)(rng) < needed) {
        selected.push_back(i);
        --needed;
      }
    }
  }

  auto selects = [&](std::size_t t, std::int64_t local) {
    if (!sampling) return true;
    return std::binary_search(selected.begin(), selected.end(), offsets[t] + local);
  };

  std::vector<TaskResult> results(tasks.size());
  if (!options.up_to_iso) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      std::int64_t local = 0;
      run_task_raw(lattice, tasks[t], [&](const std::vector<int>& chosen) {
        if (selects(t, local++)) results[t].add(id, build(lattice, chosen), options);
      });
    }
  } else {
    // Canonical forms per task, first occurrence in enumeration order wins.
    std::vector<std::vector<std::pair<SimplicialComplex, std::vector<VertexSet::Mask>>>> items(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      std::int64_t local = 0;
      run_task_raw(lattice, tasks[t], [&](const std::vector<int>& chosen) {
        if (!selects(t, local++)) return;
        auto k = build(lattice, chosen);
        auto form = canonical_form(k);
        items[t].emplace_back(std::move(k), std::move(form));
      });
    }
    std::set<std::vector<VertexSet::Mask>> seen;
    std::vector<std::vector<SimplicialComplex>> keep(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      for (auto& [k, form] : items[t]) {
        if (seen.insert(std::move(form)).second) keep[t].push_back(std::move(k));
      }
      items[t].clear();
    }
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      for (const auto& k : keep[t]) results[t].add(id, k, options);
    }
  }

  TheoremReport report;
  report.theorem = id;
  report.m = m;
  report.options = options;
  for (auto& r : results) {
    report.checked += r.checked;
    report.skipped += r.skipped;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  if (!report.failures.empty()) {
    report.status = Status::kFail;
  } else if (report.skipped > 0) {
    report.status = Status::kSkipped;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const TheoremReport& report, bool include_timing) {
  nlohmann::json j;
  j["theorem"] = to_string(report.theorem);
  j["m"] = report.m;
  j["status"] = to_string(report.status);
  j["checked"] = report.checked;
  j["skipped"] = report.skipped;
  j["failure_count"] = report.failures.size();
  auto failures = nlohmann::json::array();
  for (std::size_t i = 0; i < report.failures.size() && i < kListedFailures; ++i) {
    failures.push_back({{"complex", io::to_json(report.failures[i].complex)},
                        {"diagnostic", report.failures[i].diagnostic}});
  }
  j["failures"] = failures;
  const auto& o = report.options;
  nlohmann::json opts;
  opts["up_to_iso"] = o.up_to_iso;
  opts["sample"] = o.sample;
  opts["seed"] = o.seed;
  opts["full"] = o.full;
  if (report.theorem == TheoremId::kBuchstaber) {
    opts["oracle"] = o.oracle;
    opts["p"] = o.p;
    opts["budget"] = o.budget;
  }
  j["options"] = opts;
  if (include_timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

}  // namespace bier::verify
