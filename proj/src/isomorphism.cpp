#include "bier/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "bier/error.hpp"

namespace bier {

namespace {

constexpr int kLabels = VertexSet::kMaxLabel + 1;
using CoCount = std::array<std::array<int, kLabels>, kLabels>;

struct Profile {
  std::vector<int> order;  // vertices
  std::map<int, std::vector<std::int64_t>> invariant;
  CoCount together{};
};

Profile profile_of(const SimplicialComplex& k) {
  Profile p;
  for (VertexSet f : k.facets()) {
    for (int u : f) {
      for (int w : f) ++p.together[u][w];
    }
  }
  for (int v : k.vertices()) {
    std::vector<std::int64_t> key;
    key.push_back(p.together[v][v]);
    std::vector<std::int64_t> sizes;
    for (VertexSet f : k.facets()) {
      if (f.contains(v)) sizes.push_back(f.size());
    }
    std::sort(sizes.begin(), sizes.end());
    key.insert(key.end(), sizes.begin(), sizes.end());
    key.push_back(-1);
    const auto lk = f_vector(link(k, VertexSet::singleton(v)));
    key.insert(key.end(), lk.counts.begin(), lk.counts.end());
    // trailing zeros depend on the ground size, not on the complex
    while (!key.empty() && key.back() == 0) key.pop_back();
    p.invariant[v] = std::move(key);
  }
  return p;
}

std::vector<std::int64_t> sorted_facet_sizes(const SimplicialComplex& k) {
  std::vector<std::int64_t> sizes;
  for (VertexSet f : k.facets()) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

class Matcher {
 public:
  Matcher(const Profile& a, const Profile& b, const SimplicialComplex& ka, const SimplicialComplex& kb)
      : a_(a), b_(b), ka_(ka), kb_(kb) {
    image_.assign(kLabels, 0);
    used_.fill(false);
  }

  bool search(std::size_t depth) {
    if (depth == a_.order.size()) {
      IsoCertificate cert{image_};
      return verify_certificate(ka_, kb_, cert);
    }
    const int u = a_.order[depth];
    const auto& key = a_.invariant.at(u);
    for (int w : b_.order) {
      if (used_[w] || b_.invariant.at(w) != key) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int prev = a_.order[j];
        ok = a_.together[u][prev] == b_.together[w][image_[prev]];
      }
      if (!ok) continue;
      image_[u] = w;
      used_[w] = true;
      if (search(depth + 1)) return true;
      used_[w] = false;
      image_[u] = 0;
    }
    return false;
  }

  std::vector<int> image() const { return image_; }

 private:
  const Profile& a_;
  const Profile& b_;
  const SimplicialComplex& ka_;
  const SimplicialComplex& kb_;
  std::vector<int> image_;
  std::array<bool, kLabels> used_{};
};

}  // namespace

bool verify_certificate(const SimplicialComplex& a, const SimplicialComplex& b, const IsoCertificate& cert) {
  if (a.facets().size() != b.facets().size()) return false;
  if (a.vertices().size() != b.vertices().size()) return false;
  VertexSet targets;
  for (int v : a.vertices()) {
    if (static_cast<std::size_t>(v) >= cert.image.size()) return false;
    const int t = cert.image[v];
    if (!b.vertices().contains(t) || targets.contains(t)) return false;
    targets = targets.with(t);
  }
  std::vector<VertexSet> mapped;
  for (VertexSet f : a.facets()) {
    VertexSet g;
    for (int v : f) g = g.with(cert.image[v]);
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end(), CanonicalLess{});
  return std::equal(mapped.begin(), mapped.end(), b.facets().begin(), b.facets().end());
}

std::optional<IsoCertificate> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices().size() != b.vertices().size() || a.facets().size() != b.facets().size()) return std::nullopt;
  if (sorted_facet_sizes(a) != sorted_facet_sizes(b)) return std::nullopt;
  if (trimmed(f_vector(a).counts) != trimmed(f_vector(b).counts)) return std::nullopt;

  Profile pa = profile_of(a);
  Profile pb = profile_of(b);
  std::map<std::vector<std::int64_t>, int> class_a;
  std::map<std::vector<std::int64_t>, int> class_b;
  for (const auto& [v, key] : pa.invariant) ++class_a[key];
  for (const auto& [v, key] : pb.invariant) ++class_b[key];
  if (class_a != class_b) return std::nullopt;

  // Rarest invariant classes first; then prefer vertices adjacent to already ordered ones.
  std::vector<int> pending = a.vertices().labels();
  VertexSet placed;
  while (!pending.empty()) {
    auto score = [&](int v) {
      int touching = 0;
      for (int p : placed) touching += pa.together[v][p] > 0 ? 1 : 0;
      return std::make_tuple(-touching, class_a[pa.invariant[v]], v);
    };
    auto best = std::min_element(pending.begin(), pending.end(), [&](int x, int y) { return score(x) < score(y); });
    pa.order.push_back(*best);
    placed = placed.with(*best);
    pending.erase(best);
  }
  pb.order = b.vertices().labels();

  Matcher matcher(pa, pb, a, b);
  if (!matcher.search(0)) return std::nullopt;
  return IsoCertificate{matcher.image()};
}

std::vector<VertexSet::Mask> canonical_form(const SimplicialComplex& k) {
  const int m = k.ground_size();
  if (m > 10) throw Error(ErrorCode::kMTooLarge, "canonical form scans all m! relabelings");
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<VertexSet::Mask> best;
  std::vector<VertexSet::Mask> current(k.facets().size());
  do {
    for (std::size_t i = 0; i < current.size(); ++i) {
      VertexSet::Mask out = 0;
      for (int v : k.facets()[i]) out |= VertexSet::Mask{1} << perm[static_cast<std::size_t>(v - 1)];
      current[i] = out;
    }
    std::sort(current.begin(), current.end());
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(), static_cast<VertexSet::Mask>(m));
  return best;
}

}  // namespace bier
