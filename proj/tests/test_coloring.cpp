#include <doctest.h>

#include <random>

#include "bier/coloring.hpp"
#include "bier/error.hpp"
#include "bier/fixtures.hpp"
#include "bier/verify.hpp"
#include "helpers.hpp"

using namespace bier;
using namespace bier::coloring;
using testing::cx;
using testing::masks;

namespace {

int oracle_chi(const SimplicialComplex& k) { return oracle::chromatic_number(oracle::skeleton_graph(masks(k))); }

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(fixtures::cycle(5)).chi == 3);
  CHECK(chromatic_number(fixtures::cycle(6)).chi == 2);
  CHECK(chromatic_number(fixtures::gamma6()).chi == 1);
  CHECK(chromatic_number(fixtures::skeleton(6, 1)).chi == 6);
  CHECK(chromatic_number(bier::bier(fixtures::gamma6()).complex).chi == 2);
  CHECK(chromatic_number(bier::bier(fixtures::gamma3()).complex).chi == 3);
  CHECK(chi_or_zero(SimplicialComplex::void_complex(3)) == 0);
  CHECK_THROWS_AS(chromatic_number(SimplicialComplex::void_complex(3)), Error);

  const auto r = chromatic_number(fixtures::cycle(7));
  CHECK(is_proper(one_skeleton(fixtures::cycle(7)), r.coloring));
  CHECK(r.coloring.num_colors == 3);
}

TEST_CASE("DSATUR matches subset DP on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::bernoulli_distribution edge(0.15 + 0.1 * (trial % 8));
    std::vector<VertexSet> gens;
    for (int v = 1; v <= n; ++v) gens.push_back({v});
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (edge(rng)) gens.push_back({a, b});
      }
    }
    const auto k = SimplicialComplex::from_facets(n, gens);
    const auto r = chromatic_number(k);
    CHECK(r.chi == oracle_chi(k));
    CHECK(is_proper(one_skeleton(k), r.coloring));
  }
}

TEST_CASE("DSATUR matches subset DP on every Bier sphere with m <= 4") {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& k : verify::enumerate_complexes(m)) {
      const auto b = bier::bier(k).complex;
      CHECK(chromatic_number(b).chi == oracle_chi(b));
    }
  }
}

TEST_CASE("bounds for chi of Bier spheres") {
  const auto b6 = chi_bier_bounds(fixtures::gamma6());
  CHECK(b6.lower == 2);
  CHECK(b6.upper == 3);
  const auto b3 = chi_bier_bounds(fixtures::gamma3());
  CHECK(b3.lower == 3);
  CHECK(b3.upper == 3);
  for (int m = 2; m <= 5; ++m) {
    for (const auto& k : verify::enumerate_complexes(m)) {
      const auto bounds = chi_bier_bounds(k);
      const auto b = bier::bier(k).complex;
      const int chi = m <= 4 ? oracle_chi(b) : chromatic_number(b).chi;
      CHECK(bounds.lower <= chi);
      CHECK(chi <= bounds.upper);
      CHECK(bounds.upper == m);
      CHECK(is_proper(one_skeleton(b), bounds.upper_witness));
    }
  }
}

TEST_CASE("cone and weak cone apexes") {
  CHECK(cone_apexes(fixtures::gamma4()) == VertexSet{1});
  CHECK(weak_cone_apexes(fixtures::gamma4()) == VertexSet{1});
  CHECK(cone_apexes(fixtures::gamma3()).empty());
  CHECK(weak_cone_apexes(fixtures::gamma3()) == VertexSet{1, 2, 3});
  CHECK(weak_cone_apexes(fixtures::g4()) == VertexSet{1, 2});
  CHECK(cone_apexes(SimplicialComplex::void_complex(3)).empty());
}

TEST_CASE("weak suspensions and suspensions") {
  const auto k5 = suspension_structure(bier::bier(fixtures::km(5)));
  CHECK(k5.kind == SuspensionKind::kWeakSuspensionOnly);
  CHECK(std::find(k5.pairs.begin(), k5.pairs.end(), std::pair{1, 6}) != k5.pairs.end());
  CHECK(k5.suspension_pairs.empty());

  const auto c = suspension_structure(bier::bier(cone(fixtures::gamma6(), 4)));
  CHECK(c.kind == SuspensionKind::kSuspension);
  CHECK(c.suspension_pairs == Pairs{{4, 8}});

  // Every {i,i'} is a weak pair of Bier of the 1-skeleton on [5], none a suspension pair.
  const auto sk = suspension_structure(bier::bier(fixtures::skeleton(5, 1)));
  CHECK(sk.kind == SuspensionKind::kWeakSuspensionOnly);
  CHECK(sk.pairs == Pairs{{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
  CHECK(sk.suspension_pairs.empty());
  CHECK(suspension_structure(fixtures::cycle(5)).kind == SuspensionKind::kNotWeakSuspension);

  const auto oct = suspension_structure(cx(6, {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}}));
  CHECK(oct.kind == SuspensionKind::kSuspension);
  CHECK(oct.suspension_pairs == Pairs{{1, 2}, {3, 4}, {5, 6}});

  SimplicialComplex rest = SimplicialComplex::void_complex(1);
  CHECK(is_suspension_over(fixtures::cycle(4), 1, 3, &rest));
  CHECK(rest == cx(4, {{2}, {4}}));
  CHECK_FALSE(is_suspension_over(fixtures::cycle(4), 1, 2));
}

TEST_CASE("K_m is a weak suspension that is not a suspension") {
  for (int m = 5; m <= 7; ++m) {
    const auto b = bier::bier(fixtures::km(m));
    const auto s = suspension_structure(b);
    CHECK(s.kind == SuspensionKind::kWeakSuspensionOnly);
    CHECK(chromatic_number(b.complex).chi == m);
  }
}

TEST_CASE("min-colorable classifier examples") {
  const auto g6 = min_colorable_classifier(fixtures::gamma6());
  CHECK(g6.min_colorable);
  CHECK(g6.trace == std::vector<std::string>{"gamma6"});
  CHECK(min_colorable_classifier(fixtures::gamma4()).min_colorable);
  CHECK(min_colorable_classifier(fixtures::g4()).min_colorable);
  CHECK_FALSE(min_colorable_classifier(fixtures::gamma3()).min_colorable);
  CHECK_FALSE(min_colorable_classifier(fixtures::gamma5()).min_colorable);
  const auto coned = min_colorable_classifier(alexander_dual(cone(fixtures::gamma6(), 4)));
  CHECK(coned.min_colorable);
  CHECK(coned.trace == std::vector<std::string>{"gamma6", "cone"});
  CHECK_THROWS_AS(min_colorable_classifier(cx(2, {{1}})), Error);
}

TEST_CASE("min-colorable closure matches the brute-force closure and chi = m - 1") {
  for (int m = 3; m <= 5; ++m) {
    const auto closure = oracle::min_colorable_closure(m);
    for (const auto& k : verify::enumerate_complexes(m)) {
      const bool in_closure = closure.contains(oracle::canonical(m, masks(k)));
      const auto b = bier::bier(k).complex;
      const bool min_chromatic = chromatic_number(b).chi == m - 1;
      CHECK(min_colorable_classifier(k).min_colorable == in_closure);
      CHECK(min_chromatic == in_closure);
    }
  }
}

TEST_CASE("min-chromatic type recognizer") {
  CHECK(recognize_min_chromatic_type(bier::bier(fixtures::gamma6())).type == MinChromaticType::kCubeTimesHexagon);
  CHECK(recognize_min_chromatic_type(bier::bier(fixtures::gamma4())).type == MinChromaticType::kCube);
  CHECK(recognize_min_chromatic_type(bier::bier(fixtures::g4())).type == MinChromaticType::kCube);
  CHECK(recognize_min_chromatic_type(bier::bier(fixtures::gamma3())).type == MinChromaticType::kNone);
  CHECK(recognize_min_chromatic_type(bier::bier(fixtures::km(5))).type == MinChromaticType::kNone);

  const auto r = recognize_min_chromatic_type(bier::bier(cone(cone(fixtures::gamma6(), 4), 5)));
  CHECK(r.type == MinChromaticType::kCubeTimesHexagon);
  CHECK(r.stripped.size() == 2);
  CHECK(r.residue_vertices == 6);
}
