#include "cto/world.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cto {

void check_target_state(const PlanarGraph& g, const TargetState& s) {
  if (s.edge >= g.edges.size()) throw std::logic_error("target edge index out of range");
  const Edge& e = g.edges[s.edge];
  if (s.toward != e.u && s.toward != e.v) throw std::logic_error("target heading is not an endpoint of its edge");
  if (!(s.offset >= 0.0 && s.offset <= e.length)) {
    throw std::logic_error("target offset " + std::to_string(s.offset) + " outside edge of length " +
                           std::to_string(e.length));
  }
}

Point target_point(const PlanarGraph& g, const TargetState& s) {
  check_target_state(g, s);
  const Edge& e = g.edges[s.edge];
  const Point from = g.vertices[e.other(s.toward)];
  const Point to = g.vertices[s.toward];
  if (s.offset == e.length) return to;
  const double f = s.offset / e.length;
  return {from.x + f * (to.x - from.x), from.y + f * (to.y - from.y)};
}

TargetState step_target(const PlanarGraph& g, const TargetState& s, Rng& rng) {
  TargetState next = s;
  next.offset += s.speed;
  while (next.offset >= g.edges[next.edge].length) {
    const double residual = next.offset - g.edges[next.edge].length;
    const std::size_t at = next.toward;
    const auto& incident = g.adjacency[at];
    next.edge = incident[rng.uniform_index(incident.size())];
    next.toward = g.edges[next.edge].other(at);
    next.offset = residual;
  }
  return next;
}

ObserverState step_observer(const ObserverState& o) {
  ObserverState next = o;
  const double d = distance(o.position, o.destination);
  if (d <= o.speed) {
    next.position = o.destination;
  } else {
    const double f = o.speed / d;
    next.position = {o.position.x + f * (o.destination.x - o.position.x),
                     o.position.y + f * (o.destination.y - o.position.y)};
  }
  return next;
}

Point predict_target(const PlanarGraph& g, const TargetState& s, std::size_t horizon) {
  // Repeated addition rather than speed * horizon, so branch-free forecasts
  // match step_target bit for bit.
  const double length = g.edges[s.edge].length;
  TargetState ahead = s;
  for (std::size_t k = 0; k < horizon && ahead.offset < length; ++k) ahead.offset += s.speed;
  ahead.offset = std::min(ahead.offset, length);
  return target_point(g, ahead);
}

TargetState random_target_state(const PlanarGraph& g, double speed, Rng& rng) {
  TargetState s;
  s.edge = rng.uniform_index(g.edges.size());
  const Edge& e = g.edges[s.edge];
  s.offset = rng.uniform(0.0, e.length);
  s.toward = rng.uniform_index(2) == 0 ? e.u : e.v;
  s.speed = speed;
  return s;
}

}  // namespace cto
