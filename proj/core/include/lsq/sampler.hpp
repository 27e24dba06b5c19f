#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "lsq/latin.hpp"

namespace lsq {

// Seedable generator with a pinned algorithm (mt19937_64) and a
// rejection-sampled bounded draw, so streams are identical across
// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, m), m >= 1.
  std::uint64_t below(std::uint64_t m) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % m;
  }

 private:
  std::mt19937_64 engine_;
};

// Derives independent stream seeds from a base seed (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// n x n x n array over {-1, 0, 1} with every axis-aligned line summing to 1
// and at most one -1. Without a -1 it encodes a Latin square. Per-line
// lookup tables give O(1) access to the (at most two) 1-cells of a line.
class IncidenceCube {
 public:
  explicit IncidenceCube(const LatinSquare& L);

  int order() const { return n_; }
  int at(int x, int y, int z) const {
    return cube_[index(x, y, z)];
  }
  bool proper() const { return !improper_; }
  std::optional<std::array<int, 3>> improper_cell() const {
    if (improper_) return improper_cell_;
    return std::nullopt;
  }

  // One +-1 move. From a proper cube the pivot cell is chosen uniformly at
  // random; from an improper cube the -1 cell is the pivot and each of its
  // three doubled lines contributes a uniformly chosen 1-cell.
  void step(Rng& rng);

  // Requires proper(); throws invalid_argument otherwise.
  LatinSquare to_square() const;

  bool lines_sum_to_one() const;  // full invariant sweep, for tests

 private:
  size_t index(int x, int y, int z) const {
    return (static_cast<size_t>(x - 1) * n_ + (y - 1)) * n_ + (z - 1);
  }
  void add_one(int x, int y, int z);
  void sub_one(int x, int y, int z);

  int n_;
  std::vector<signed char> cube_;
  // ones along each line, up to two entries, 0 = empty slot
  std::vector<std::array<int, 2>> rc_;  // (x, y) -> symbols z
  std::vector<std::array<int, 2>> rs_;  // (x, z) -> columns y
  std::vector<std::array<int, 2>> cs_;  // (y, z) -> rows x
  bool improper_ = false;
  std::array<int, 3> improper_cell_ = {0, 0, 0};
};

struct JmOptions {
  std::uint64_t burnin = 0;   // 0 -> default n^3 moves
  std::uint64_t spacing = 0;  // 0 -> default n^2 moves
};

// One Markov chain: starts from the cyclic group table, runs the burn-in,
// then emits a proper square every `spacing` moves (stepping past any
// improper state at emission time). Deterministic given (n, seed, options).
class JmChain {
 public:
  JmChain(int n, std::uint64_t seed, JmOptions options = {});

  LatinSquare next();

  const IncidenceCube& cube() const { return cube_; }

 private:
  IncidenceCube cube_;
  Rng rng_;
  std::uint64_t spacing_;
};

// Throws order_too_small for n < 2.
LatinSquare jm_sample(int n, std::uint64_t seed);

struct HStats {
  int order = 0;
  std::uint64_t samples = 0;
  int min = 0;
  int max = 0;
  int mode = 0;  // ties broken toward the smaller value
  double mean = 0.0;
  double stddev = 0.0;
  std::vector<std::uint64_t> histogram;  // counts indexed by H
};

// Statistics of the Hamiltonian row-cycle count over independent samples.
// Samples are drawn in fixed chunks of 1000 per chain (chain c seeded with
// derive_seed(seed, c)), so the result does not depend on jobs.
HStats h_statistics(int n, std::uint64_t samples, std::uint64_t seed,
                    int jobs = 1);

// Uniform random permutation of 1..n as a complete PartialPermutation.
PartialPermutation random_permutation(int n, Rng& rng);
// Three independent uniform permutations.
PartialLabelling random_isotopism(int n, Rng& rng);

}  // namespace lsq
