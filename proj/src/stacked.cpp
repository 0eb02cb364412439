#include "bier/stacked.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bier/bier_sphere.hpp"
#include "bier/chordal.hpp"
#include "bier/error.hpp"

namespace bier::chordal {

namespace {

using Point = std::vector<mpq_class>;

// Normal of the hyperplane through `pts` (d points in R^d); empty when they
// are affinely dependent.
Point hyperplane_normal(const std::vector<const Point*>& pts, int d) {
  std::vector<Point> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point row(d);
    for (int c = 0; c < d; ++c) row[c] = (*pts[i])[c] - (*pts[0])[c];
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < d && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    const mpq_class inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c];
      for (int j = 0; j < d; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != d - 1) return {};
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  Point normal(d);
  normal[free_col] = 1;
  for (int i = 0; i < r; ++i) normal[pivot_col[i]] = -rows[i][free_col];
  return normal;
}

bool convex_position(const std::map<int, Point>& coords, std::span<const VertexSet> facets, int d) {
  for (VertexSet f : facets) {
    std::vector<const Point*> pts;
    for (int v : f) pts.push_back(&coords.at(v));
    if (static_cast<int>(pts.size()) != d) return false;
    const Point normal = hyperplane_normal(pts, d);
    if (normal.empty()) return false;
    int side = 0;
    for (const auto& [label, p] : coords) {
      if (f.contains(label)) continue;
      mpq_class s = 0;
      for (int c = 0; c < d; ++c) s += normal[c] * (p[c] - (*pts[0])[c]);
      const int sign = sgn(s);
      if (sign == 0 || (side != 0 && sign != side)) return false;
      side = sign;
    }
  }
  return true;
}

Point centroid(const std::map<int, Point>& coords, VertexSet s, int d) {
  Point c(d);
  for (int v : s) {
    for (int j = 0; j < d; ++j) c[j] += coords.at(v)[j];
  }
  for (auto& x : c) x /= s.size();
  return c;
}

}  // namespace

StackedRealization realize_stacked(const SimplicialComplex& k) {
  const auto cls = classify_chordal_bier(k);
  if (!cls.chordal) throw Error(ErrorCode::kNotChordalBier, "Bier(K) is not chordal for " + k.to_string());
  const auto b = bier(k);
  const int m = b.m;
  const int d = m - 1;

  // Base simplex and the apexes that subdivide its facets, as Bier labels.
  VertexSet base;
  std::vector<int> apexes;
  if (m <= 3) {
    base = b.complex.vertices();
  } else if (cls.side == Side::kBase) {
    base = VertexSet::range(m + 1, 2 * m);
    apexes = k.vertices().labels();
  } else {
    base = VertexSet::ground(m);
    for (int i : b.dual.vertices()) apexes.push_back(b.primed(i));
  }
  auto partner = [m](int v) { return v > m ? v - m : v + m; };

  std::map<int, Point> coords;
  int slot = 0;
  for (int v : base) {
    Point p(d);
    if (slot < d) p[slot] = 1;
    coords[v] = std::move(p);
    ++slot;
  }
  const Point center = centroid(coords, base, d);
  auto current = SimplicialComplex::boundary_of_simplex(2 * m, base);

  StackedRealization r;
  r.dimension = d;
  for (int apex : apexes) {
    const VertexSet facet = base.without(partner(apex));
    const auto next = stellar_subdivide(current, facet, apex);
    const Point cf = centroid(coords, facet, d);
    mpq_class delta = 1;
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt, delta /= 2) {
      Point p(d);
      for (int j = 0; j < d; ++j) p[j] = cf[j] + delta * (cf[j] - center[j]);
      coords[apex] = p;
      placed = convex_position(coords, next.facets(), d);
    }
    if (!placed) throw std::logic_error("no convex apex placement found for label " + std::to_string(apex));
    current = next;
    r.provenance.push_back({facet, apex});
  }

  const auto target = b.complex.facets();
  if (!std::equal(current.facets().begin(), current.facets().end(), target.begin(), target.end())) {
    throw std::logic_error("stacked realization does not reproduce Bier(K) for " + k.to_string());
  }
  for (auto& [label, p] : coords) {
    r.labels.push_back(label);
    r.points.push_back(std::move(p));
  }
  r.facets.assign(target.begin(), target.end());
  return r;
}

bool verify_convex_position(const StackedRealization& r) {
  std::map<int, Point> coords;
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    if (static_cast<int>(r.points[i].size()) != r.dimension) return false;
    coords[r.labels[i]] = r.points[i];
  }
  return convex_position(coords, r.facets, r.dimension);
}

std::string to_off(const StackedRealization& r) {
  std::ostringstream out;
  out << r.labels.size() << ' ' << r.facets.size() << '\n';
  for (const auto& p : r.points) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ' ';
      out << p[j].get_num().get_str() << '/' << p[j].get_den().get_str();
    }
    out << '\n';
  }
  for (VertexSet f : r.facets) {
    bool first = true;
    for (int v : f) {
      const auto idx = std::lower_bound(r.labels.begin(), r.labels.end(), v) - r.labels.begin();
      out << (first ? "" : " ") << idx;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bier::chordal
