#pragma once

#include <cstdint>
#include <random>

#include "graph.hpp"

namespace stc {

// Portable draws on top of mt19937_64, whose output sequence is fixed by the
// standard (the std distributions are not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  // Uniform in [0, bound).
  uint64_t below(uint64_t bound);
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 eng_;
};

// Random multigraph with edge connectivity exactly k: uniform random vertex
// pairs are added until the connectivity reaches k (it grows by at most one
// per edge, so it cannot overshoot).
Graph generate_k_connected(int n, Weight k, uint64_t seed);

}  // namespace stc
