#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cto/controllers.hpp"

namespace cto {

/// Full parameterization of one run. Defaults are the reference experiment values.
struct SimConfig {
  double width = 150.0;
  double height = 150.0;
  std::size_t steps = 1500;
  std::size_t n_observers = 12;
  std::size_t n_targets = 24;
  std::size_t n_vertices = 40;
  double sr = 15.0;
  double rv = 0.5;
  double ur = 0.25;
  ControllerKind controller = ControllerKind::HCH;
  std::size_t n_candidates = kDefaultCandidates;
  double perturb_mag = kDefaultPerturbation;
  std::size_t horizon = 10;  // HC+hp only
  std::size_t kmeans_iters = kDefaultKMeansIters;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

struct RunResult {
  double rho = 0.0;
  std::uint64_t seed = 0;
  SimConfig config;
  double wall_time_s = 0.0;
  /// Observed-target count after each motion step, t = 1..T.
  std::vector<std::uint32_t> observed_per_step;
};

/// Update period in steps, round(1 / ur).
std::size_t update_period(double ur);

/// True when the controller refreshes destinations at step t.
bool should_update(std::size_t t, double ur);

/// Builds the initial world (graph, targets, observers) from the seed's sub-streams.
WorldState initial_world(const SimConfig& cfg);

/// Called after each motion step with the updated world.
using StepHook = std::function<void(const WorldState&)>;

/// Runs T steps: at each update instant the controller refreshes the
/// destinations, then targets and observers move and coverage is sampled.
RunResult run_simulation(const SimConfig& cfg, const StepHook& on_step = {});

}  // namespace cto
