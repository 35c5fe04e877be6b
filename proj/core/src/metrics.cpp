#include "cto/metrics.hpp"

#include <stdexcept>

namespace cto {

std::size_t ObservationMatrix::observed_count() const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (at(i, j)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

ObservationMatrix observation_matrix(std::span<const Point> observers, std::span<const Point> targets, double sr) {
  if (!(sr > 0.0)) throw std::invalid_argument("sensor range must be positive");
  ObservationMatrix a(observers.size(), targets.size());
  for (std::size_t i = 0; i < observers.size(); ++i) {
    for (std::size_t j = 0; j < targets.size(); ++j) a.set(i, j, distance(observers[i], targets[j]) <= sr);
  }
  return a;
}

double coverage_fraction(const ObservationMatrix& a) {
  if (a.cols() == 0) throw std::invalid_argument("coverage is undefined without targets");
  return static_cast<double>(a.observed_count()) / static_cast<double>(a.cols());
}

std::size_t count_observed(std::span<const Point> observers, std::span<const Point> targets, double sr) {
  std::size_t count = 0;
  for (const Point& t : targets) {
    for (const Point& o : observers) {
      if (distance(o, t) <= sr) {
        ++count;
        break;
      }
    }
  }
  return count;
}

MetricsAccumulator accumulate(MetricsAccumulator acc, const ObservationMatrix& a) {
  return accumulate(acc, a.observed_count());
}

MetricsAccumulator accumulate(MetricsAccumulator acc, std::size_t observed) {
  acc.steps_seen += 1;
  acc.observed_sum += observed;
  return acc;
}

double finalize_rho(const MetricsAccumulator& acc, std::size_t m) {
  if (acc.steps_seen == 0) throw std::invalid_argument("no time-steps accumulated");
  if (m == 0) throw std::invalid_argument("target count must be positive");
  const double anot = static_cast<double>(acc.observed_sum) / static_cast<double>(acc.steps_seen);
  return anot / static_cast<double>(m);
}

double mean_pairwise_observer_distance(std::span<const Point> points) {
  if (points.size() < 2) throw std::invalid_argument("mean pairwise distance needs at least two points");
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) sum += distance(points[i], points[j]);
  }
  const double pairs = 0.5 * static_cast<double>(points.size()) * static_cast<double>(points.size() - 1);
  return sum / pairs;
}

}  // namespace cto
