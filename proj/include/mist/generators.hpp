#pragma once

#include <cstdint>

#include "mist/graph.hpp"

namespace mist {

/// xorshift64* (Marsaglia shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D),
/// state seeded through one splitmix64 step so seed 0 is usable.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);

 private:
  std::uint64_t state_;
};

/// k squares a_i b_i c_i d_i (vertices 4i..4i+3) chained by (d_i, a_{i+1}).
Graph gen_tight(int k);

/// Uniform labeled tree on n vertices (Pruefer decoding).
Graph random_tree(int n, std::uint64_t seed);

/// Random tree plus m - n + 1 distinct random extra edges.
Graph gen_random(int n, int m, std::uint64_t seed);

}  // namespace mist
