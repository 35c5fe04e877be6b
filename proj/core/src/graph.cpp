#include "cto/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cto {

PlanarGraph PlanarGraph::from_edges(std::vector<Point> vertices,
                                    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  PlanarGraph g;
  g.vertices = std::move(vertices);
  g.adjacency.resize(g.vertices.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  seen.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= g.vertices.size() || v >= g.vertices.size()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop edge");
    seen.emplace_back(std::min(u, v), std::max(u, v));
    const std::size_t id = g.edges.size();
    g.edges.push_back({u, v, distance(g.vertices[u], g.vertices[v])});
    g.adjacency[u].push_back(id);
    g.adjacency[v].push_back(id);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw std::invalid_argument("duplicate edge");
  return g;
}

double PlanarGraph::min_edge_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges) m = std::min(m, e.length);
  return m;
}

bool PlanarGraph::is_connected() const {
  if (vertices.empty()) return true;
  std::vector<char> visited(vertices.size(), 0);
  std::vector<std::size_t> stack{0};
  visited[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : adjacency[v]) {
      const std::size_t w = edges[e].other(v);
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertices.size();
}

PlanarGraph generate_random_graph(std::size_t n_vertices, double width, double height, Rng& rng) {
  if (n_vertices < 3) throw GenerationError("random graph needs at least 3 vertices");
  constexpr int kMaxAttempts = 1000;

  std::vector<Point> pts(n_vertices);
  for (Point& p : pts) p = {rng.uniform(0.0, width), rng.uniform(0.0, height)};

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Triangle> tris;
    try {
      tris = delaunay_triangulate(pts);
    } catch (const GenerationError&) {
      for (Point& p : pts) p = {rng.uniform(0.0, width), rng.uniform(0.0, height)};
      continue;
    }

    // Four near-cocircular points make the triangulation ambiguous.
    std::size_t offending = n_vertices;
    for (const Triangle& t : tris) {
      for (std::size_t i = 0; i < n_vertices && offending == n_vertices; ++i) {
        if (i == t.a || i == t.b || i == t.c) continue;
        if (near_circumcircle(t, pts, pts[i])) offending = i;
      }
      if (offending != n_vertices) break;
    }
    if (offending != n_vertices) {
      pts[offending] = {rng.uniform(0.0, width), rng.uniform(0.0, height)};
      continue;
    }

    const auto pairs = triangulation_edges(tris);
    return PlanarGraph::from_edges(std::move(pts), pairs);
  }
  throw GenerationError("random graph generation exceeded retry limit");
}

}  // namespace cto
