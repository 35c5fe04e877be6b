#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace cto {

/// Seeded random stream with platform-independent draws.
///
/// The standard distributions are implementation-defined, so uniform
/// variates are derived directly from the 64-bit engine output. Equal seeds
/// give equal sequences on every conforming compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Named sub-streams derived from one master seed.
enum class Stream : std::uint64_t { Graph = 1, Targets = 2, Observers = 3, Controller = 4 };

/// Counter-based seed derivation (splitmix64 finalizer over seed and stream id).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id);

inline Rng make_stream(std::uint64_t master, Stream s) {
  return Rng(derive_seed(master, static_cast<std::uint64_t>(s)));
}

}  // namespace cto
