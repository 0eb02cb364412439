#include "bier/complex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "bier/error.hpp"

namespace bier {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidComplex: return "InvalidComplex";
    case ErrorCode::kLinkOfNonFace: return "LinkOfNonFace";
    case ErrorCode::kOverlappingGroundSets: return "OverlappingGroundSets";
    case ErrorCode::kDualOfFullSimplex: return "DualOfFullSimplex";
    case ErrorCode::kBadGroundSize: return "BadGroundSize";
    case ErrorCode::kNoVertices: return "NoVertices";
    case ErrorCode::kBadM: return "BadM";
    case ErrorCode::kMissingVertexAssignment: return "MissingVertexAssignment";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kNotChordalBier: return "NotChordalBier";
    case ErrorCode::kBadSchedule: return "BadSchedule";
    case ErrorCode::kMTooLarge: return "MTooLarge";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Error";
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace {

// Removes duplicates and sets contained in another set; result in canonical order.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  kept.reserve(sets.size());
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [s](VertexSet f) { return s.subset_of(f); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
  const VertexSet::Mask full = s.bits();
  VertexSet::Mask sub = full;
  while (true) {
    fn(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

void check_ground(int m) {
  if (m < 1 || m > SimplicialComplex::kMaxGround) {
    throw Error(ErrorCode::kInvalidComplex, "ground set size " + std::to_string(m) + " outside 1..32");
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> facets) : m_(m), facets_(std::move(facets)) {
  for (VertexSet f : facets_) vertices_ = vertices_ | f;
}

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<VertexSet> generators, int* dropped) {
  check_ground(m);
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidComplex, "the empty family is not a simplicial complex");
  }
  const VertexSet g = VertexSet::ground(m);
  for (VertexSet s : generators) {
    if (!s.subset_of(g)) {
      throw Error(ErrorCode::kInvalidComplex, "face " + s.to_string() + " is not a subset of [" + std::to_string(m) + "]");
    }
  }
  const std::size_t before = generators.size();
  auto facets = maximal_sets(std::move(generators));
  if (dropped != nullptr) *dropped = static_cast<int>(before - facets.size());
  return SimplicialComplex(m, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_minimal_non_faces(int m, std::span<const VertexSet> minimal_non_faces) {
  check_ground(m);
  if (m > 20) throw Error(ErrorCode::kMTooLarge, "construction from minimal non-faces scans 2^m subsets");
  std::vector<VertexSet> face_list;
  const VertexSet::Mask limit = VertexSet::Mask{1} << m;
  for (VertexSet::Mask bits = 0; bits < limit; ++bits) {
    const VertexSet s(bits);
    const bool has_non_face =
        std::any_of(minimal_non_faces.begin(), minimal_non_faces.end(), [s](VertexSet n) { return n.subset_of(s); });
    if (!has_non_face) face_list.push_back(s);
  }
  if (face_list.empty()) {
    throw Error(ErrorCode::kInvalidComplex, "∅ listed as a non-face");
  }
  return from_facets(m, std::move(face_list));
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(int m, VertexSet s) {
  if (s.empty()) throw Error(ErrorCode::kInvalidComplex, "boundary of the empty simplex");
  std::vector<VertexSet> gens;
  for (int v : s) gens.push_back(s.without(v));
  return from_facets(m, std::move(gens));
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (VertexSet f : facets_) best = std::max(best, f.size());
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [this](VertexSet f) { return f.size() == facets_.front().size(); });
}

std::string SimplicialComplex::to_string() const {
  std::ostringstream out;
  out << "m=" << m_ << " {";
  for (std::size_t i = 0; i < facets_.size(); ++i) out << (i ? "," : "") << facets_[i].to_string();
  out << "}";
  return out.str();
}

std::int64_t FVector::total() const {
  std::int64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::vector<VertexSet> faces(const SimplicialComplex& k) {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : k.facets()) for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k) {
  const auto face_list = faces(k);
  const std::unordered_set<VertexSet> face_set(face_list.begin(), face_list.end());
  std::unordered_set<VertexSet> found;
  const VertexSet ground = k.ground();
  // A minimal non-face S has every S \ {u} a face, so S = F ∪ {v} for some face F.
  for (VertexSet f : face_list) {
    for (int v : ground - f) {
      const VertexSet s = f.with(v);
      if (face_set.contains(s) || found.contains(s)) continue;
      const bool minimal = std::all_of(s.begin(), s.end(), [&](int u) { return face_set.contains(s.without(u)); });
      if (minimal) found.insert(s);
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet i) {
  std::vector<VertexSet> gens;
  for (VertexSet f : k.facets()) gens.push_back(f & i);
  return SimplicialComplex::from_facets(k.ground_size(), std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet face) {
  if (!k.contains(face)) throw Error(ErrorCode::kLinkOfNonFace, face.to_string() + " is not a face of " + k.to_string());
  std::vector<VertexSet> gens;
  for (VertexSet f : k.facets()) {
    if (face.subset_of(f)) gens.push_back(f - face);
  }
  return SimplicialComplex::from_facets(k.ground_size(), std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& k, int vertex) {
  return full_subcomplex(k, k.ground().without(vertex));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices().intersects(b.vertices())) {
    throw Error(ErrorCode::kOverlappingGroundSets,
                "vertex sets " + a.vertices().to_string() + " and " + b.vertices().to_string() + " meet");
  }
  std::vector<VertexSet> gens;
  gens.reserve(a.facets().size() * b.facets().size());
  for (VertexSet fa : a.facets()) {
    for (VertexSet fb : b.facets()) gens.push_back(fa | fb);
  }
  return SimplicialComplex::from_facets(std::max(a.ground_size(), b.ground_size()), std::move(gens));
}

SimplicialComplex cone(const SimplicialComplex& k, int apex) {
  if (apex < 1 || apex > SimplicialComplex::kMaxGround) throw Error(ErrorCode::kInvalidComplex, "apex label out of range");
  const auto point = SimplicialComplex::simplex(apex, VertexSet::singleton(apex));
  return join(point, k);
}

SimplicialComplex suspension(const SimplicialComplex& k, int v, int w) {
  if (v == w) throw Error(ErrorCode::kOverlappingGroundSets, "suspension needs two distinct points");
  const int m = std::max(v, w);
  if (v < 1 || w < 1 || m > SimplicialComplex::kMaxGround) {
    throw Error(ErrorCode::kInvalidComplex, "suspension label out of range");
  }
  const auto two_points = SimplicialComplex::from_facets(m, {VertexSet::singleton(v), VertexSet::singleton(w)});
  return join(two_points, k);
}

SimplicialComplex skeleton(const SimplicialComplex& k, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidComplex, "skeleton dimension must be non-negative");
  std::vector<VertexSet> gens;
  for (VertexSet f : k.facets()) {
    if (f.size() <= n + 1) {
      gens.push_back(f);
      continue;
    }
    for_each_subset(f, [&](VertexSet s) {
      if (s.size() == n + 1) gens.push_back(s);
    });
  }
  return SimplicialComplex::from_facets(k.ground_size(), std::move(gens));
}

FVector f_vector(const SimplicialComplex& k) {
  FVector fv;
  fv.counts.assign(static_cast<std::size_t>(k.ground_size()) + 1, 0);
  for (VertexSet s : faces(k)) ++fv.counts[static_cast<std::size_t>(s.size())];
  return fv;
}

SimplicialComplex relabel(const SimplicialComplex& k, std::span<const int> image, int new_m) {
  std::vector<VertexSet> gens;
  gens.reserve(k.facets().size());
  for (VertexSet f : k.facets()) {
    VertexSet g;
    for (int v : f) {
      const int target = static_cast<std::size_t>(v) < image.size() && image[v] != 0 ? image[v] : v;
      if (target < 1 || target > new_m) throw Error(ErrorCode::kInvalidComplex, "relabel target out of range");
      g = g.with(target);
    }
    if (g.size() != f.size()) throw Error(ErrorCode::kInvalidComplex, "relabel is not injective on a facet");
    gens.push_back(g);
  }
  return SimplicialComplex::from_facets(new_m, std::move(gens));
}

SimplicialComplex compact_labels(const SimplicialComplex& k) {
  std::vector<int> image(static_cast<std::size_t>(k.ground_size()) + 1, 0);
  int next = 0;
  for (int v : k.vertices()) image[v] = ++next;
  return relabel(k, image, std::max(next, 1));
}

}  // namespace bier
