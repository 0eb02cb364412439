#include <doctest.h>

#include "bier/error.hpp"
#include "bier/fixtures.hpp"
#include "bier/isomorphism.hpp"
#include "bier/verify.hpp"
#include "helpers.hpp"

using namespace bier;
using testing::cx;
using testing::masks;

TEST_CASE("vertex sets use bit i-1 for label i") {
  VertexSet s{1, 3, 32};
  CHECK(s.bits() == ((1u << 0) | (1u << 2) | (1u << 31)));
  CHECK(s.size() == 3);
  CHECK(s.min_label() == 1);
  CHECK(s.max_label() == 32);
  CHECK(s.labels() == std::vector<int>{1, 3, 32});
  CHECK(VertexSet{1, 2}.shifted(3) == VertexSet{4, 5});
  CHECK(VertexSet{1, 2}.proper_subset_of(VertexSet{1, 2, 3}));
  CHECK_FALSE(VertexSet{1, 2}.proper_subset_of(VertexSet{1, 2}));
  CHECK(canonical_less(VertexSet{3}, VertexSet{1, 2}));
  CHECK(canonical_less(VertexSet{1, 2}, VertexSet{1, 3}));
}

TEST_CASE("facets are kept as an antichain in canonical order") {
  int dropped = 0;
  auto k = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2}, {4}, {4}, {}}, &dropped);
  CHECK(dropped == 3);
  REQUIRE(k.facets().size() == 2);
  CHECK(k.facets()[0] == VertexSet{4});
  CHECK(k.facets()[1] == VertexSet{1, 2, 3});
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 4}}), Error);
}

TEST_CASE("faces examples") {
  auto a = faces(cx(3, {{1, 2}, {3}}));
  CHECK(a == std::vector<VertexSet>{{}, {1}, {2}, {3}, {1, 2}});
  CHECK(faces(SimplicialComplex::void_complex(3)) == std::vector<VertexSet>{{}});
  CHECK(faces(fixtures::gamma3()).size() == 7);
}

TEST_CASE("minimal non-faces examples") {
  CHECK(minimal_non_faces(SimplicialComplex::simplex(4, VertexSet::ground(4))).empty());
  CHECK(minimal_non_faces(SimplicialComplex::boundary_of_simplex(4, VertexSet::ground(4))) ==
        std::vector<VertexSet>{VertexSet::ground(4)});
  CHECK(minimal_non_faces(fixtures::g4()) == std::vector<VertexSet>{{3}});
}

TEST_CASE("minimal non-faces agree with a brute-force scan and rebuild the complex") {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& k : verify::enumerate_complexes(m)) {
      const auto family = oracle::downward_closure(masks(k));
      std::vector<VertexSet> expected;
      for (oracle::Mask s = 0; s < (1u << m); ++s) {
        if (family.contains(s)) continue;
        bool minimal = true;
        for (int v = 0; v < m; ++v) {
          if ((s >> v & 1) && !family.contains(s & ~(1u << v))) minimal = false;
        }
        if (minimal) expected.emplace_back(s);
      }
      std::sort(expected.begin(), expected.end(), CanonicalLess{});
      const auto mf = minimal_non_faces(k);
      CHECK(mf == expected);
      CHECK(SimplicialComplex::from_minimal_non_faces(m, mf) == k);
    }
  }
}

TEST_CASE("full subcomplex, link and deletion") {
  const auto g3 = fixtures::gamma3();
  CHECK(full_subcomplex(g3, {1, 2}) == cx(3, {{1, 2}}));
  CHECK(full_subcomplex(g3, {}).is_void());
  CHECK(full_subcomplex(g3, {1, 2}).ground_size() == 3);

  // K_I is the simplex on I exactly when I is a face.
  const auto k = cx(4, {{1, 2, 3}, {3, 4}});
  for (oracle::Mask s = 0; s < 16; ++s) {
    const VertexSet i(s);
    CHECK((full_subcomplex(k, i) == SimplicialComplex::simplex(4, i)) == k.contains(i));
  }

  CHECK(link(k, {}) == k);
  CHECK(link(k, {1, 2, 3}).is_void());
  CHECK(link(g3, {1}) == cx(3, {{2}, {3}}));
  CHECK_THROWS_AS(link(g3, {1, 2, 3}), Error);
  CHECK(deletion(k, 3) == cx(4, {{1, 2}, {4}}));
}

TEST_CASE("join, cone and suspension") {
  CHECK(are_isomorphic(cone(cx(2, {{1}, {2}}), 3), fixtures::gamma4()).has_value());
  CHECK(cone(cx(2, {{1}, {2}}), 3) == cx(3, {{1, 3}, {2, 3}}));
  auto z4 = suspension(cx(2, {{1}, {2}}), 3, 4);
  CHECK(are_isomorphic(z4, fixtures::cycle(4)).has_value());
  CHECK(join(cx(1, {{1}}), cx(2, {{2}})) == cx(2, {{1, 2}}));
  CHECK_THROWS_AS(join(cx(2, {{1, 2}}), cx(3, {{2, 3}})), Error);
  CHECK_THROWS_AS(suspension(cx(2, {{1}}), 3, 3), Error);
}

TEST_CASE("skeleta and f-vectors") {
  const auto k = cx(4, {{1, 2, 3}, {3, 4}});
  auto sk0 = skeleton(k, 0);
  CHECK(sk0 == cx(4, {{1}, {2}, {3}, {4}}));
  CHECK(skeleton(SimplicialComplex::simplex(3, VertexSet::ground(3)), 1) == fixtures::gamma3());
  CHECK(skeleton(k, 5) == k);

  CHECK(f_vector(SimplicialComplex::simplex(3, VertexSet::ground(3))).counts == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(f_vector(SimplicialComplex::void_complex(4)).counts == std::vector<std::int64_t>{1, 0, 0, 0, 0});
  CHECK(f_vector(k).at(-1) == 1);
  CHECK(f_vector(k).at(7) == 0);
}

TEST_CASE("invariants over every complex on at most four vertices") {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& k : verify::enumerate_complexes(m)) {
      const auto oracle_faces = oracle::downward_closure(masks(k));
      const auto fs = faces(k);
      CHECK(fs.size() == oracle_faces.size());
      for (auto f : fs) CHECK(oracle_faces.contains(f.bits()));
      CHECK(f_vector(k).total() == static_cast<std::int64_t>(fs.size()));
      for (auto a : k.facets()) {
        for (auto b : k.facets()) CHECK((a == b || !a.subset_of(b)));
      }
      if (m < 4) {
        const auto c = cone(k, m + 1);
        for (auto f : c.facets()) CHECK(f.contains(m + 1));
        CHECK(relabel(deletion(c, m + 1), {}, m) == k);
      }
    }
  }
}

TEST_CASE("relabel and compact labels") {
  const auto k = cx(5, {{2, 4}, {5}});
  CHECK(compact_labels(k) == cx(3, {{1, 2}, {3}}));
  const std::vector<int> image{0, 0, 1, 0, 3, 2};
  CHECK(relabel(k, image, 3) == cx(3, {{1, 3}, {2}}));
  CHECK_THROWS_AS(relabel(k, image, 2), Error);
}
