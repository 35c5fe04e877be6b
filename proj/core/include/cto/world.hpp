#pragma once

#include <cstddef>
#include <vector>

#include "cto/geometry.hpp"
#include "cto/graph.hpp"
#include "cto/random.hpp"

namespace cto {

/// Target kinematic state anchored to a graph edge.
///
/// `offset` is the distance traveled from the endpoint opposite `toward`,
/// so the target sits at `toward` when offset equals the edge length.
struct TargetState {
  std::size_t edge = 0;
  std::size_t toward = 0;
  double offset = 0.0;
  double speed = 0.0;

  friend bool operator==(const TargetState&, const TargetState&) = default;
};

inline constexpr double kObserverSpeed = 1.0;

struct ObserverState {
  Point position;
  Point destination;
  double speed = kObserverSpeed;

  friend bool operator==(const ObserverState&, const ObserverState&) = default;
};

struct WorldState {
  std::size_t t = 0;
  PlanarGraph graph;
  std::vector<TargetState> targets;
  std::vector<ObserverState> observers;
};

/// Throws std::logic_error when `s` violates the TargetState invariants on `g`.
void check_target_state(const PlanarGraph& g, const TargetState& s);

/// Planar position of a target by linear interpolation along its edge.
Point target_point(const PlanarGraph& g, const TargetState& s);

/// Advances a target by one time-step. At a vertex the next edge is drawn
/// uniformly from all incident edges (the arrival edge included) and any
/// leftover motion continues on it.
TargetState step_target(const PlanarGraph& g, const TargetState& s, Rng& rng);

/// Moves straight toward the destination by at most one unit.
ObserverState step_observer(const ObserverState& o);

/// Position after `horizon` steps assuming the target stays on its edge;
/// the forecast holds at the approached vertex once it is reached.
Point predict_target(const PlanarGraph& g, const TargetState& s, std::size_t horizon);

/// Uniform edge, uniform offset, uniform heading.
TargetState random_target_state(const PlanarGraph& g, double speed, Rng& rng);

}  // namespace cto
