#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wellkit {

/// splitmix64 finalizer; bijective on 64-bit values.
std::uint64_t mix64(std::uint64_t x);

/// Combines a base seed with a list of counters into a new seed.
/// Used for counter-based stream derivation so that any single trial,
/// tree, or benchmark cell is reproducible in isolation.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

/// Deterministic 64-bit generator (splitmix64 stream). The standard
/// library distributions are implementation-defined, so every draw the
/// toolkit makes goes through this class to keep results identical
/// across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Unbiased draw in [0, n); n must be >= 1. Uses rejection sampling.
  std::uint64_t below(std::uint64_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (two draws per value).
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

/// First k entries of a Fisher-Yates pass over 0..n-1.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t k);

}  // namespace wellkit
