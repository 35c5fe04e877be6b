#include "cto/engine.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "cto/metrics.hpp"

namespace cto {

void SimConfig::validate() const {
  if (!(width > 0.0 && height > 0.0)) throw std::invalid_argument("arena dimensions must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (n_observers < 1) throw std::invalid_argument("need at least one observer");
  if (n_targets < 1) throw std::invalid_argument("need at least one target");
  if (n_vertices < 3) throw std::invalid_argument("graph needs at least 3 vertices");
  if (!(sr > 0.0)) throw std::invalid_argument("sr must be positive");
  if (!(rv > 0.0 && rv < 1.0)) throw std::invalid_argument("rv must lie in (0, 1)");
  if (!(ur > 0.0 && ur <= 1.0)) throw std::invalid_argument("ur must lie in (0, 1]");
  if (n_candidates < 1) throw std::invalid_argument("need at least one candidate");
  if (!(perturb_mag >= 0.0)) throw std::invalid_argument("perturbation magnitude must be non-negative");
}

std::size_t update_period(double ur) {
  const long period = std::lround(1.0 / ur);
  return period < 1 ? 1 : static_cast<std::size_t>(period);
}

bool should_update(std::size_t t, double ur) { return t % update_period(ur) == 0; }

namespace {

struct Setup {
  WorldState world;
  Rng target_rng;  // placement draws, then motion draws
};

Setup build_world(const SimConfig& cfg) {
  Rng graph_rng = make_stream(cfg.seed, Stream::Graph);
  Rng observer_rng = make_stream(cfg.seed, Stream::Observers);
  Setup s{WorldState{}, make_stream(cfg.seed, Stream::Targets)};
  WorldState& w = s.world;
  w.graph = generate_random_graph(cfg.n_vertices, cfg.width, cfg.height, graph_rng);
  w.targets.reserve(cfg.n_targets);
  for (std::size_t j = 0; j < cfg.n_targets; ++j) {
    w.targets.push_back(random_target_state(w.graph, cfg.rv, s.target_rng));
  }
  w.observers.reserve(cfg.n_observers);
  for (std::size_t i = 0; i < cfg.n_observers; ++i) {
    const Point p{observer_rng.uniform(0.0, cfg.width), observer_rng.uniform(0.0, cfg.height)};
    w.observers.push_back({p, p, kObserverSpeed});
  }
  return s;
}

}  // namespace

WorldState initial_world(const SimConfig& cfg) { return build_world(cfg).world; }

RunResult run_simulation(const SimConfig& cfg, const StepHook& on_step) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  Setup setup = build_world(cfg);
  WorldState& w = setup.world;
  Rng& target_rng = setup.target_rng;
  Rng control_rng = make_stream(cfg.seed, Stream::Controller);

  const Arena arena{cfg.width, cfg.height};
  std::vector<Point> observer_points(cfg.n_observers);
  std::vector<Point> destinations(cfg.n_observers);
  std::vector<Point> target_points(cfg.n_targets);

  RunResult result;
  result.seed = cfg.seed;
  result.config = cfg;
  result.observed_per_step.reserve(cfg.steps);
  MetricsAccumulator acc;

  for (w.t = 1; w.t <= cfg.steps; ++w.t) {
    if (should_update(w.t - 1, cfg.ur)) {
      for (std::size_t i = 0; i < cfg.n_observers; ++i) {
        observer_points[i] = w.observers[i].position;
        destinations[i] = w.observers[i].destination;
      }
      for (std::size_t j = 0; j < cfg.n_targets; ++j) target_points[j] = target_point(w.graph, w.targets[j]);

      const ControlInput in{observer_points, destinations, target_points, cfg.sr, arena, control_rng, cfg.perturb_mag};
      std::vector<Point> next;
      switch (cfg.controller) {
        case ControllerKind::KMeans: next = kmeans_control(in, cfg.n_observers, cfg.kmeans_iters); break;
        case ControllerKind::HC: next = hc_control(in, cfg.n_candidates); break;
        case ControllerKind::HCH: next = hc_h_control(in, cfg.n_candidates); break;
        case ControllerKind::HCHP: next = hc_hp_control(in, cfg.n_candidates, cfg.horizon, w.graph, w.targets); break;
      }
      for (std::size_t i = 0; i < cfg.n_observers; ++i) w.observers[i].destination = next[i];
    }

    for (TargetState& s : w.targets) s = step_target(w.graph, s, target_rng);
    for (ObserverState& o : w.observers) o = step_observer(o);

    for (std::size_t i = 0; i < cfg.n_observers; ++i) observer_points[i] = w.observers[i].position;
    for (std::size_t j = 0; j < cfg.n_targets; ++j) target_points[j] = target_point(w.graph, w.targets[j]);
    const std::size_t observed = count_observed(observer_points, target_points, cfg.sr);
    acc = accumulate(acc, observed);
    result.observed_per_step.push_back(static_cast<std::uint32_t>(observed));
    if (on_step) on_step(w);
  }

  result.rho = finalize_rho(acc, cfg.n_targets);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace cto
