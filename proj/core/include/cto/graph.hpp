#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cto/geometry.hpp"
#include "cto/random.hpp"

namespace cto {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double length = 0.0;

  std::size_t other(std::size_t vertex) const { return vertex == u ? v : u; }
};

/// Embedded road graph the targets walk on.
struct PlanarGraph {
  std::vector<Point> vertices;
  std::vector<Edge> edges;
  /// Incident edge indices per vertex, in edge-list order.
  std::vector<std::vector<std::size_t>> adjacency;

  /// Builds edges and adjacency from vertex pairs. Throws std::invalid_argument
  /// on self-loops, duplicate edges or out-of-range indices.
  static PlanarGraph from_edges(std::vector<Point> vertices,
                                std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }
  double min_edge_length() const;
  bool is_connected() const;
};

/// Uniform vertices over the arena joined by their Delaunay triangulation.
/// Near-cocircular configurations are broken by resampling the offending
/// point; gives up with GenerationError after a bounded number of retries.
PlanarGraph generate_random_graph(std::size_t n_vertices, double width, double height, Rng& rng);

}  // namespace cto
