#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cto/geometry.hpp"

namespace cto {

/// Binary N x M matrix; entry (i, j) is set when target j is inside the
/// closed sensor disc of observer i.
class ObservationMatrix {
 public:
  ObservationMatrix() = default;
  ObservationMatrix(std::size_t n_observers, std::size_t n_targets)
      : rows_(n_observers), cols_(n_targets), bits_(n_observers * n_targets, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

  /// Number of columns holding at least one set entry; each target counts once.
  std::size_t observed_count() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

ObservationMatrix observation_matrix(std::span<const Point> observers, std::span<const Point> targets, double sr);

/// Observed targets over M. Throws std::invalid_argument when M is zero.
double coverage_fraction(const ObservationMatrix& a);

/// Same count as observation_matrix(...).observed_count() without building the matrix.
std::size_t count_observed(std::span<const Point> observers, std::span<const Point> targets, double sr);

/// Running sum behind the average number of observed targets.
struct MetricsAccumulator {
  std::size_t steps_seen = 0;
  std::size_t observed_sum = 0;
};

MetricsAccumulator accumulate(MetricsAccumulator acc, const ObservationMatrix& a);
MetricsAccumulator accumulate(MetricsAccumulator acc, std::size_t observed);

/// Average number of observed targets divided by m. Throws
/// std::invalid_argument when no steps were seen or m is zero.
double finalize_rho(const MetricsAccumulator& acc, std::size_t m);

/// Mean distance over all unordered pairs. Throws std::invalid_argument for fewer than two points.
double mean_pairwise_observer_distance(std::span<const Point> points);

}  // namespace cto
