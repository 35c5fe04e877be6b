#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cto/geometry.hpp"
#include "cto/graph.hpp"
#include "cto/random.hpp"
#include "cto/world.hpp"

namespace cto {

enum class ControllerKind { KMeans, HC, HCH, HCHP };

/// CLI spelling: kmeans, hc, hc-h, hc-hp.
std::string_view to_string(ControllerKind kind);
std::optional<ControllerKind> parse_controller(std::string_view name);

inline constexpr std::size_t kDefaultCandidates = 100;
inline constexpr double kDefaultPerturbation = 10.0;
inline constexpr std::size_t kDefaultKMeansIters = 50;

/// Snapshot handed to a controller at an update instant.
struct ControlInput {
  std::span<const Point> observer_points;
  std::span<const Point> current_destinations;
  /// Current target positions, or predicted ones for HC+hp.
  std::span<const Point> target_eval_points;
  double sr = 15.0;
  Arena arena;
  Rng& rng;
  double perturb_magnitude = kDefaultPerturbation;
};

struct CandidateScore {
  double rho_new = 0.0;  // instantaneous coverage fraction
  double rho_ob = 0.0;   // mean pairwise distance of the candidate

  friend bool operator==(const CandidateScore&, const CandidateScore&) = default;
};

/// Scores a destination vector as if the observers already stood on it.
/// rho_ob is zero when there are fewer than two observers.
CandidateScore evaluate_candidate(std::span<const Point> candidate, std::span<const Point> target_eval_points,
                                  double sr);

/// Adds an independent U[-magnitude, magnitude] draw to every coordinate,
/// then clamps into the arena. Draw order is x then y per observer.
std::vector<Point> perturb(std::span<const Point> destinations, const Arena& arena, Rng& rng,
                           double magnitude = kDefaultPerturbation);

/// Plain hill climbing: adopt the first best candidate if it strictly improves coverage.
std::vector<Point> hc_control(const ControlInput& in, std::size_t n_candidates = kDefaultCandidates);

/// Hill climbing with the dispersion tie-break: when nothing improves
/// coverage, a candidate with equal coverage and strictly larger mean
/// pairwise distance is adopted; otherwise the current destinations stay.
std::vector<Point> hc_h_control(const ControlInput& in, std::size_t n_candidates = kDefaultCandidates);

/// hc_h_control scored against targets forecast `horizon` steps ahead.
/// `in.target_eval_points` is ignored; forecasts come from `targets`.
std::vector<Point> hc_hp_control(const ControlInput& in, std::size_t n_candidates, std::size_t horizon,
                                 const PlanarGraph& graph, std::span<const TargetState> targets);

/// Lloyd's algorithm over the target points, seeded with the current
/// observer positions; centroid i becomes observer i's destination.
/// Empty clusters keep their centroid. Requires k == N and at least one target.
std::vector<Point> kmeans_control(const ControlInput& in, std::size_t k,
                                  std::size_t max_iters = kDefaultKMeansIters);

/// Within-cluster sum of squared distances for nearest-centroid assignment.
double within_cluster_ss(std::span<const Point> centroids, std::span<const Point> points);

}  // namespace cto
