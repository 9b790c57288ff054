#include "crn/geometry.hpp"

#include <algorithm>
#include <set>

namespace crn {

namespace {

void check_hull_dim(std::size_t n) {
  if (n == 0 || n > 3) {
    throw Error(ErrorKind::UnsupportedDimension, "convex hulls are supported in dimensions 1 to 3, got " + std::to_string(n));
  }
}

Rational cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

RationalVector cross3(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Andrew's monotone chain; returns indices of strict hull vertices in ccw order.
std::vector<std::size_t> monotone_chain(const std::vector<Point>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

RationalVector lift(const RationalVector& local, const std::vector<std::size_t>& coords, std::size_t n) {
  RationalVector full(n, Rational(0));
  for (std::size_t i = 0; i < coords.size(); ++i) full[coords[i]] = local[i];
  return full;
}

void hull_1d(const std::vector<Point>& pts, std::size_t c, std::size_t n, Polytope& out) {
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [c](const Point& a, const Point& b) { return a[c] < b[c]; });
  out.vertices = {*lo, *hi};
  RationalVector up(n, Rational(0));
  up[c] = 1;
  RationalVector down(n, Rational(0));
  down[c] = -1;
  out.facets.push_back({up, (*lo)[c]});
  out.facets.push_back({down, -(*hi)[c]});
}

void hull_2d(const std::vector<Point>& pts, const std::vector<std::size_t>& coords, std::size_t n, Polytope& out) {
  std::vector<Point> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) proj.push_back({p[coords[0]], p[coords[1]]});
  auto order = monotone_chain(proj);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.vertices.push_back(pts[order[i]]);
    const auto& a = proj[order[i]];
    const auto& b = proj[order[(i + 1) % order.size()]];
    RationalVector normal{-(b[1] - a[1]), b[0] - a[0]};
    Rational offset = normal[0] * a[0] + normal[1] * a[1];
    out.facets.push_back({lift(normal, coords, n), offset});
  }
}

void hull_3d(const std::vector<Point>& pts, Polytope& out) {
  std::set<IntVector> seen;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto dj = linalg::sub(pts[j], pts[i]);
      for (std::size_t k = j + 1; k < m; ++k) {
        auto normal = cross3(dj, linalg::sub(pts[k], pts[i]));
        if (normal[0] == 0 && normal[1] == 0 && normal[2] == 0) continue;
        Rational offset = linalg::dot(normal, pts[i]);
        bool any_pos = false;
        bool any_neg = false;
        for (std::size_t q = 0; q < m && !(any_pos && any_neg); ++q) {
          int s = sgn(linalg::dot(normal, pts[q]) - offset);
          any_pos |= s > 0;
          any_neg |= s < 0;
        }
        if (any_pos && any_neg) continue;
        if (any_neg) {
          for (auto& x : normal) x = -x;
        }
        auto key = primitive_integer(normal);
        if (!seen.insert(key).second) continue;
        auto rn = to_rational(key);
        out.facets.push_back({rn, linalg::dot(rn, pts[i])});
      }
    }
  }
  for (const auto& p : pts) {
    std::vector<RationalVector> tight;
    for (const auto& f : out.facets) {
      if (linalg::dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    }
    if (linalg::rank(tight, 3) == 3) out.vertices.push_back(p);
  }
}

}  // namespace

bool Polytope::contains(const Point& p) const {
  if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from polytope dimension");
  for (const auto& e : equalities) {
    if (linalg::dot(e.normal, p) != e.offset) return false;
  }
  for (const auto& f : facets) {
    if (linalg::dot(f.normal, p) < f.offset) return false;
  }
  return true;
}

Polytope convex_hull(const std::vector<Point>& input) {
  if (input.empty()) throw Error(ErrorKind::InvalidArgument, "convex hull of an empty point set");
  const std::size_t n = input.front().size();
  check_hull_dim(n);
  std::vector<Point> pts;
  for (const auto& p : input) {
    if (p.size() != n) throw Error(ErrorKind::DimensionMismatch, "hull points of different dimension");
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }

  Polytope out;
  out.dim = n;
  linalg::EchelonBasis span(n);
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    diffs.push_back(linalg::sub(pts[i], pts[0]));
    span.insert(diffs.back());
  }
  out.affine_dim = span.rank();
  for (auto& a : linalg::nullspace(diffs, n)) {
    Rational offset = linalg::dot(a, pts[0]);
    out.equalities.push_back({std::move(a), offset});
  }
  // Pivot columns of the echelon basis give coordinates on which projection is injective.
  std::vector<std::size_t> coords;
  for (const auto& row : span.rows()) {
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] != 0) {
        coords.push_back(c);
        break;
      }
    }
  }
  switch (out.affine_dim) {
    case 0: out.vertices = {pts[0]}; break;
    case 1: hull_1d(pts, coords[0], n, out); break;
    case 2: hull_2d(pts, coords, n, out); break;
    default: hull_3d(pts, out); break;
  }
  return out;
}

Polytope convex_hull(const std::vector<Exponent>& points) {
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (const auto& e : points) {
    Point p;
    for (int k : e) p.push_back(Rational(k));
    pts.push_back(std::move(p));
  }
  return convex_hull(pts);
}

bool is_strictly_interior(const Polytope& poly, const Point& p) {
  if (p.size() != poly.dim) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from polytope dimension");
  if (!poly.is_full_dimensional()) return false;
  return std::all_of(poly.facets.begin(), poly.facets.end(),
                     [&](const Facet& f) { return linalg::dot(f.normal, p) > f.offset; });
}

SupportData support_minimizers(const std::vector<Exponent>& points, const IntVector& u) {
  if (std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x == 0; })) {
    throw Error(ErrorKind::InvalidArgument, "support direction must be nonzero");
  }
  SupportData out;
  out.direction = u;
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    IntVector p(points[i].begin(), points[i].end());
    auto v = checked_dot(u, p);
    if (first || v < out.value) {
      out.value = v;
      out.minimizers.clear();
      first = false;
    }
    if (v == out.value) out.minimizers.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direction cells

namespace {

IntVector sign_normalized(IntVector v) {
  v = primitive(std::move(v));
  for (auto x : v) {
    if (x != 0) {
      if (x < 0) {
        for (auto& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVector scale(const IntVector& a, std::int64_t k) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

IntVector cross(const IntVector& a, const IntVector& b) {
  return {checked_add(checked_mul(a[1], b[2]), -checked_mul(a[2], b[1])),
          checked_add(checked_mul(a[2], b[0]), -checked_mul(a[0], b[2])),
          checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]))};
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Sorts directions lying in the plane normal to `axis` counter-clockwise around it.
void sort_around(std::vector<IntVector>& rays, const IntVector& axis) {
  const IntVector a = rays.front();
  const IntVector b = cross(axis, a);
  auto half = [&](const IntVector& r) {
    auto rb = checked_dot(r, b);
    return rb < 0 || (rb == 0 && checked_dot(r, a) < 0);
  };
  std::sort(rays.begin(), rays.end(), [&](const IntVector& r1, const IntVector& r2) {
    bool h1 = half(r1);
    bool h2 = half(r2);
    if (h1 != h2) return !h1;
    return checked_dot(axis, cross(r1, r2)) > 0;
  });
}

void insert_unique(std::set<IntVector>& out, const IntVector& v) {
  if (!is_zero(v)) out.insert(primitive(v));
}

DirectionSet reps_2d(const std::vector<IntVector>& normals) {
  std::set<IntVector> crit;
  for (const auto& v : normals) {
    IntVector r{-v[1], v[0]};
    insert_unique(crit, r);
    insert_unique(crit, negate(r));
  }
  std::vector<IntVector> rays(crit.begin(), crit.end());
  std::set<IntVector> out(crit.begin(), crit.end());
  if (rays.empty()) {
    for (const auto& d : std::vector<IntVector>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) out.insert(d);
    return {out.begin(), out.end()};
  }
  // Plane R^2 embedded as z = 0, rotating around +z.
  std::vector<IntVector> lifted;
  for (const auto& r : rays) lifted.push_back({r[0], r[1], 0});
  sort_around(lifted, {0, 0, 1});
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const auto& a = lifted[i];
    const auto& b = lifted[(i + 1) % lifted.size()];
    IntVector mid;
    std::int64_t turn = checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]));
    if (turn > 0) {
      mid = {checked_add(a[0], b[0]), checked_add(a[1], b[1])};
    } else {
      mid = {-a[1], a[0]};
    }
    insert_unique(out, mid);
  }
  return {out.begin(), out.end()};
}

DirectionSet reps_3d(const std::vector<IntVector>& normals) {
  std::set<IntVector> out;
  std::set<IntVector> ray_set;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      auto c = cross(normals[i], normals[j]);
      insert_unique(ray_set, c);
      insert_unique(ray_set, negate(c));
    }
  }
  out.insert(ray_set.begin(), ray_set.end());
  for (const auto& v : normals) {
    std::vector<IntVector> rays;
    for (const auto& r : ray_set) {
      if (checked_dot(v, r) == 0) rays.push_back(r);
    }
    std::vector<IntVector> arcs;
    if (rays.empty()) {
      // A lone plane: its great circle is a single cell.
      IntVector a = std::abs(v[0]) > 0 || std::abs(v[1]) > 0 ? IntVector{-v[1], v[0], 0} : IntVector{1, 0, 0};
      IntVector b = cross(v, a);
      arcs = {a, negate(a), b, negate(b)};
    } else {
      sort_around(rays, v);
      for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto& a = rays[i];
        const auto& b = rays[(i + 1) % rays.size()];
        if (rays.size() > 1 && checked_dot(v, cross(a, b)) > 0) {
          arcs.push_back(add(a, b));
        } else {
          arcs.push_back(cross(v, a));
        }
      }
    }
    // Push each arc point off the plane by less than its distance to any other plane.
    std::int64_t bound = 0;
    for (const auto& other : normals) bound = std::max(bound, abs64(checked_dot(other, v)));
    const std::int64_t k = checked_add(bound, 1);
    for (const auto& w : arcs) {
      insert_unique(out, w);
      auto kw = scale(w, k);
      insert_unique(out, add(kw, v));
      insert_unique(out, add(kw, negate(v)));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<IntVector> arrangement_normals(const ReactionNetwork& net) {
  const std::size_t n = net.dim();
  std::set<IntVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    normals.insert(e);
  }
  auto sources = net.source_indices();
  for (std::size_t a = 0; a < sources.size(); ++a) {
    for (std::size_t b = a + 1; b < sources.size(); ++b) {
      const auto& ya = net.vertices()[sources[a]];
      const auto& yb = net.vertices()[sources[b]];
      IntVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = ya[i] - yb[i];
      normals.insert(sign_normalized(d));
    }
  }
  for (std::size_t j = 0; j < net.edges().size(); ++j) normals.insert(sign_normalized(net.reaction_vector(j)));
  return {normals.begin(), normals.end()};
}

DirectionSet cell_representatives(const std::vector<IntVector>& normals, std::size_t dim) {
  std::vector<IntVector> clean;
  {
    std::set<IntVector> s;
    for (const auto& v : normals) {
      if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "normal dimension differs from ambient dimension");
      if (!is_zero(v)) s.insert(sign_normalized(v));
    }
    clean.assign(s.begin(), s.end());
  }
  switch (dim) {
    case 1: return {{-1}, {1}};
    case 2: return reps_2d(clean);
    case 3:
      if (clean.empty()) return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      return reps_3d(clean);
    default:
      throw Error(ErrorKind::UnsupportedDimension,
                  "direction cells are supported in dimensions 1 to 3, got " + std::to_string(dim));
  }
}

DirectionSet representative_directions(const ReactionNetwork& net) {
  if (net.dim() == 0 || net.dim() > 3) {
    throw Error(ErrorKind::UnsupportedDimension,
                "sweep directions are supported in dimensions 1 to 3, got " + std::to_string(net.dim()));
  }
  return cell_representatives(arrangement_normals(net), net.dim());
}

std::vector<int> sign_pattern(const std::vector<IntVector>& normals, const IntVector& u) {
  std::vector<int> s;
  s.reserve(normals.size());
  for (const auto& v : normals) {
    auto d = checked_dot(v, u);
    s.push_back((d > 0) - (d < 0));
  }
  return s;
}

}  // namespace crn
