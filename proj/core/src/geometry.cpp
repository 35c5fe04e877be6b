#include "cto/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cto {

Point Arena::clamp(Point p) const {
  return {std::clamp(p.x, 0.0, width), std::clamp(p.y, 0.0, height)};
}

double orient2d(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool is_degenerate(Point a, Point b, Point c) {
  const double scale = std::abs((b.x - a.x) * (c.y - a.y)) + std::abs((b.y - a.y) * (c.x - a.x));
  return std::abs(orient2d(a, b, c)) <= kPredicateEps * scale;
}

namespace {

struct InCircle {
  double det;        // positive when d is inside and (a, b, c) is counter-clockwise
  double permanent;  // magnitude bound for relative tolerance
};

InCircle incircle(Point a, Point b, Point c, Point d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double bc = bdx * cdy - cdx * bdy;
  const double ca = cdx * ady - adx * cdy;
  const double ab = adx * bdy - bdx * ady;
  const double det = alift * bc + blift * ca + clift * ab;
  const double perm = alift * (std::abs(bdx * cdy) + std::abs(cdx * bdy)) +
                      blift * (std::abs(cdx * ady) + std::abs(adx * cdy)) +
                      clift * (std::abs(adx * bdy) + std::abs(bdx * ady));
  return {det, perm};
}

// Sign-normalized in-circle value: positive inside regardless of orientation.
InCircle oriented_incircle(const Triangle& t, std::span<const Point> points, Point p) {
  if (t.a >= points.size() || t.b >= points.size() || t.c >= points.size()) {
    throw std::invalid_argument("triangle index out of range");
  }
  const Point a = points[t.a], b = points[t.b], c = points[t.c];
  if (t.a == t.b || t.b == t.c || t.a == t.c || is_degenerate(a, b, c)) {
    throw std::invalid_argument("degenerate triangle");
  }
  InCircle ic = incircle(a, b, c, p);
  if (orient2d(a, b, c) < 0.0) ic.det = -ic.det;
  return ic;
}

}  // namespace

bool circumcircle_contains(const Triangle& t, std::span<const Point> points, Point p) {
  const InCircle ic = oriented_incircle(t, points, p);
  return ic.det > kPredicateEps * ic.permanent;
}

bool near_circumcircle(const Triangle& t, std::span<const Point> points, Point p) {
  const InCircle ic = oriented_incircle(t, points, p);
  return std::abs(ic.det) <= kPredicateEps * ic.permanent;
}

namespace {

std::size_t convex_hull_size(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  return k - 1;
}

std::vector<Triangle> bowyer_watson(std::span<const Point> input, double super_scale) {
  const std::size_t n = input.size();
  std::vector<Point> pts(input.begin(), input.end());

  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  const double r = super_scale * span;
  pts.push_back({cx - 2.0 * r, cy - r});
  pts.push_back({cx + 2.0 * r, cy - r});
  pts.push_back({cx, cy + 2.0 * r});

  std::vector<Triangle> tris{{n, n + 1, n + 2}};
  std::vector<std::array<std::size_t, 2>> boundary;
  std::vector<char> bad;

  for (std::size_t i = 0; i < n; ++i) {
    const Point p = pts[i];
    bad.assign(tris.size(), 0);
    for (std::size_t k = 0; k < tris.size(); ++k) {
      const Triangle& t = tris[k];
      // Triangles are kept counter-clockwise, so the raw determinant sign suffices.
      bad[k] = incircle(pts[t.a], pts[t.b], pts[t.c], p).det > 0.0;
    }

    // Cavity boundary: edges of bad triangles not shared with another bad triangle.
    boundary.clear();
    for (std::size_t k = 0; k < tris.size(); ++k) {
      if (!bad[k]) continue;
      const Triangle& t = tris[k];
      for (const auto& e : {std::array{t.a, t.b}, std::array{t.b, t.c}, std::array{t.c, t.a}}) {
        bool shared = false;
        for (std::size_t m = 0; m < tris.size() && !shared; ++m) {
          if (m == k || !bad[m]) continue;
          const Triangle& o = tris[m];
          const std::array<std::size_t, 3> ov{o.a, o.b, o.c};
          const bool has_u = std::find(ov.begin(), ov.end(), e[0]) != ov.end();
          const bool has_v = std::find(ov.begin(), ov.end(), e[1]) != ov.end();
          shared = has_u && has_v;
        }
        if (!shared) boundary.push_back(e);
      }
    }

    std::vector<Triangle> next;
    next.reserve(tris.size() + boundary.size());
    for (std::size_t k = 0; k < tris.size(); ++k) {
      if (!bad[k]) next.push_back(tris[k]);
    }
    // Boundary edges keep the winding of their bad triangle, so (u, v, p) stays CCW.
    for (const auto& e : boundary) next.push_back({e[0], e[1], i});
    tris = std::move(next);
  }

  std::vector<Triangle> out;
  out.reserve(tris.size());
  for (const Triangle& t : tris) {
    if (t.a < n && t.b < n && t.c < n) out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<Triangle> delaunay_triangulate(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw GenerationError("triangulation needs at least 3 points");
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw GenerationError("non-finite point");
  }
  {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw GenerationError("duplicate points");
    }
  }
  bool collinear = true;
  for (std::size_t i = 2; i < n && collinear; ++i) {
    for (std::size_t j = 1; j < i && collinear; ++j) {
      collinear = is_degenerate(points[0], points[j], points[i]);
    }
  }
  if (collinear) throw GenerationError("all points are collinear");

  // A complete triangulation of the hull has 2n - 2 - h triangles. A super
  // triangle that is too small clips hull triangles; retry with a larger one.
  const std::size_t expected = 2 * n - 2 - convex_hull_size({points.begin(), points.end()});
  double scale = 1e3;
  for (int attempt = 0; attempt < 4; ++attempt, scale *= 1e3) {
    std::vector<Triangle> tris = bowyer_watson(points, scale);
    if (tris.size() == expected) return tris;
  }
  throw GenerationError("triangulation did not cover the convex hull");
}

std::vector<std::pair<std::size_t, std::size_t>> triangulation_edges(std::span<const Triangle> triangles) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(3 * triangles.size());
  auto add = [&](std::size_t u, std::size_t v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
  for (const Triangle& t : triangles) {
    add(t.a, t.b);
    add(t.b, t.c);
    add(t.c, t.a);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool segments_intersect(Point p, Point q, Point r, Point s) {
  const double d1 = orient2d(r, s, p);
  const double d2 = orient2d(r, s, q);
  const double d3 = orient2d(p, q, r);
  const double d4 = orient2d(p, q, s);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  auto on_segment = [](Point a, Point b, Point c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
  };
  if (d1 == 0 && on_segment(r, s, p)) return true;
  if (d2 == 0 && on_segment(r, s, q)) return true;
  if (d3 == 0 && on_segment(p, q, r)) return true;
  if (d4 == 0 && on_segment(p, q, s)) return true;
  return false;
}

}  // namespace cto
