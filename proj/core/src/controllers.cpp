#include "cto/controllers.hpp"

#include <limits>
#include <stdexcept>

#include "cto/metrics.hpp"

namespace cto {

std::string_view to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::KMeans: return "kmeans";
    case ControllerKind::HC: return "hc";
    case ControllerKind::HCH: return "hc-h";
    case ControllerKind::HCHP: return "hc-hp";
  }
  return "unknown";
}

std::optional<ControllerKind> parse_controller(std::string_view name) {
  for (ControllerKind k : {ControllerKind::KMeans, ControllerKind::HC, ControllerKind::HCH, ControllerKind::HCHP}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

CandidateScore evaluate_candidate(std::span<const Point> candidate, std::span<const Point> target_eval_points,
                                  double sr) {
  CandidateScore s;
  s.rho_new = coverage_fraction(observation_matrix(candidate, target_eval_points, sr));
  s.rho_ob = candidate.size() >= 2 ? mean_pairwise_observer_distance(candidate) : 0.0;
  return s;
}

std::vector<Point> perturb(std::span<const Point> destinations, const Arena& arena, Rng& rng, double magnitude) {
  std::vector<Point> out;
  out.reserve(destinations.size());
  for (const Point& d : destinations) {
    const double dx = rng.uniform(-magnitude, magnitude);
    const double dy = rng.uniform(-magnitude, magnitude);
    out.push_back(arena.clamp({d.x + dx, d.y + dy}));
  }
  return out;
}

namespace {

std::vector<Point> hill_climb(const ControlInput& in, std::size_t n_candidates, bool dispersion_tie_break) {
  if (n_candidates == 0) throw std::invalid_argument("hill climbing needs at least one candidate");
  const std::vector<Point> current(in.current_destinations.begin(), in.current_destinations.end());
  if (current.empty()) return current;

  // All draws happen before scoring so the candidate set is fixed by the stream.
  std::vector<std::vector<Point>> candidates;
  candidates.reserve(n_candidates);
  for (std::size_t c = 0; c < n_candidates; ++c) {
    candidates.push_back(perturb(current, in.arena, in.rng, in.perturb_magnitude));
  }

  const CandidateScore incumbent = evaluate_candidate(current, in.target_eval_points, in.sr);
  std::vector<CandidateScore> scores;
  scores.reserve(n_candidates);
  for (const auto& cand : candidates) scores.push_back(evaluate_candidate(cand, in.target_eval_points, in.sr));

  std::size_t best = 0;
  for (std::size_t c = 1; c < n_candidates; ++c) {
    if (scores[c].rho_new > scores[best].rho_new) best = c;
  }
  if (scores[best].rho_new > incumbent.rho_new) return candidates[best];
  if (!dispersion_tie_break) return current;

  std::optional<std::size_t> spread;
  for (std::size_t c = 0; c < n_candidates; ++c) {
    if (scores[c].rho_new != incumbent.rho_new) continue;
    if (!spread || scores[c].rho_ob > scores[*spread].rho_ob) spread = c;
  }
  if (spread && scores[*spread].rho_ob > incumbent.rho_ob) return candidates[*spread];
  return current;
}

}  // namespace

std::vector<Point> hc_control(const ControlInput& in, std::size_t n_candidates) {
  return hill_climb(in, n_candidates, false);
}

std::vector<Point> hc_h_control(const ControlInput& in, std::size_t n_candidates) {
  return hill_climb(in, n_candidates, true);
}

std::vector<Point> hc_hp_control(const ControlInput& in, std::size_t n_candidates, std::size_t horizon,
                                 const PlanarGraph& graph, std::span<const TargetState> targets) {
  std::vector<Point> predicted;
  predicted.reserve(targets.size());
  for (const TargetState& s : targets) predicted.push_back(predict_target(graph, s, horizon));
  ControlInput forecast{in.observer_points, in.current_destinations, predicted, in.sr, in.arena, in.rng,
                        in.perturb_magnitude};
  return hill_climb(forecast, n_candidates, true);
}

namespace {

double squared_distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

std::size_t nearest(std::span<const Point> centroids, Point p) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = squared_distance(centroids[c], p);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

}  // namespace

std::vector<Point> kmeans_control(const ControlInput& in, std::size_t k, std::size_t max_iters) {
  if (k != in.observer_points.size()) throw std::invalid_argument("k-means needs one cluster per observer");
  if (in.target_eval_points.empty()) throw std::invalid_argument("k-means needs at least one target");
  constexpr double kTolerance = 1e-6;

  std::vector<Point> centroids(in.observer_points.begin(), in.observer_points.end());
  std::vector<Point> sums(k);
  std::vector<std::size_t> counts(k);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::fill(sums.begin(), sums.end(), Point{});
    std::fill(counts.begin(), counts.end(), 0);
    for (const Point& p : in.target_eval_points) {
      const std::size_t c = nearest(centroids, p);
      sums[c].x += p.x;
      sums[c].y += p.y;
      ++counts[c];
    }
    double moved = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      const double n = static_cast<double>(counts[c]);
      const Point updated{sums[c].x / n, sums[c].y / n};
      moved = std::max(moved, distance(updated, centroids[c]));
      centroids[c] = updated;
    }
    if (moved < kTolerance) break;
  }
  for (Point& c : centroids) c = in.arena.clamp(c);
  return centroids;
}

double within_cluster_ss(std::span<const Point> centroids, std::span<const Point> points) {
  double total = 0.0;
  for (const Point& p : points) total += squared_distance(centroids[nearest(centroids, p)], p);
  return total;
}

}  // namespace cto
