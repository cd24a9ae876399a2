#include "plan/rng.hpp"

#include <cmath>

namespace plan {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::uint64_t mix_seed(std::uint64_t state) {
  // SplitMix64 finalizer (Steele, Lea, Flood 2014).
  std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SeededRng::SeededRng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

std::uint64_t SeededRng::next_u64() { return engine_(); }

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform_positive() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SeededRng::normal() {
  const double u1 = uniform_positive();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double SeededRng::normal(double mean, double stddev) {
  return mean + stddev * normal();
}

SeededRng SeededRng::derive(std::uint64_t stream_id) const {
  return SeededRng(mix_seed(seed_ ^ mix_seed(stream_id + 1)));
}

}  // namespace plan
