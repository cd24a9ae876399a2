#pragma once

#include <cstdint>
#include <random>

namespace plan {

/**
 * Deterministic random source for all private mechanisms.
 *
 * The same seed and the same call sequence always produce the same draws,
 * independent of platform: uniforms come straight off the engine and
 * normals use a non-caching Box-Muller transform, so draw order is exactly
 * call order. Substreams created with derive() depend only on the original
 * seed and the stream id, which lets callers hand out independent
 * per-coordinate or per-repetition streams that can be replayed later.
 */
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  /// Raw 64-bit draw.
  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in (0, 1]; never returns zero.
  double uniform_positive();

  /// Standard normal draw. One draw per call, nothing cached.
  double normal();

  /// Normal draw with the given mean and standard deviation.
  double normal(double mean, double stddev);

  /// Independent substream; depends only on this generator's seed and id.
  SeededRng derive(std::uint64_t stream_id) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used for seed mixing.
std::uint64_t mix_seed(std::uint64_t state);

}  // namespace plan
