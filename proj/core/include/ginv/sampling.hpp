#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

// Shared defaults for every randomized genericity check in the library.
inline constexpr int kDefaultTrials = 8;
inline constexpr int kDefaultBound = 20;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Deterministic source of integer sample points. mt19937_64 has a pinned
/// bit stream, and the mapping to [-bound, bound] below avoids the
/// implementation-defined std distributions, so results are reproducible
/// across platforms for a given seed.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long draw_int(long bound) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<long>(rng_() % span) - bound;
  }

  std::vector<Rational> draw_point(std::size_t dim, long bound) {
    std::vector<Rational> p;
    p.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
      p.emplace_back(draw_int(bound));
    return p;
  }

private:
  std::mt19937_64 rng_;
};

} // namespace ginv
