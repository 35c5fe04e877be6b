#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cto {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Rectangle [0, width] x [0, height].
struct Arena {
  double width = 150.0;
  double height = 150.0;

  bool contains(Point p) const { return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height; }
  Point clamp(Point p) const;
};

/// Indices into a point list. Triangulation output is counter-clockwise.
struct Triangle {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Raised when a point set cannot be triangulated (too few points,
/// duplicates, all collinear) or random graph generation gives up.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

/// Relative tolerance used by the orientation and in-circle predicates.
inline constexpr double kPredicateEps = 1e-9;

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
double orient2d(Point a, Point b, Point c);

/// True when (a, b, c) is degenerate under the relative tolerance.
bool is_degenerate(Point a, Point b, Point c);

/// True iff p lies strictly inside the circumcircle of t. Works for either
/// vertex order. Throws std::invalid_argument for a degenerate triangle.
bool circumcircle_contains(const Triangle& t, std::span<const Point> points, Point p);

/// True when p is within the relative tolerance of the circumcircle of t.
bool near_circumcircle(const Triangle& t, std::span<const Point> points, Point p);

/// Bowyer-Watson triangulation. Throws GenerationError when fewer than three
/// points are given, points repeat, or all points are collinear.
std::vector<Triangle> delaunay_triangulate(std::span<const Point> points);

/// Distinct undirected edges (u < v) of a triangulation, sorted.
std::vector<std::pair<std::size_t, std::size_t>> triangulation_edges(std::span<const Triangle> triangles);

/// Proper or touching intersection of segments pq and rs.
bool segments_intersect(Point p, Point q, Point r, Point s);

}  // namespace cto
