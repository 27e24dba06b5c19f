#pragma once

#include <utility>
#include <vector>

#include "lsq/latin.hpp"

namespace lsq {

// Weakly decreasing list of cycle lengths of a row permutation. For a
// general Latin square every length is >= 2 (the permutation is a
// derangement).
struct CycleStructure {
  std::vector<int> lengths;

  bool operator==(const CycleStructure& other) const = default;
};

// True if a < b lexicographically.
bool lex_less(const CycleStructure& a, const CycleStructure& b);

// The permutation mapping row i to row j column-wise: sigma(L[i][c]) = L[j][c].
// Returned as a 1-based image vector indexed by symbol. Throws equal_rows.
std::vector<int> sigma(const LatinSquare& L, int i, int j);

CycleStructure cycle_structure(const LatinSquare& L, int i, int j);

// One row cycle within rows i, j: its column set and symbol set, in walk
// order starting from s.
struct RowCycle {
  int length = 0;
  std::vector<int> columns;
  std::vector<int> symbols;
};

RowCycle row_cycle_of(const LatinSquare& L, int i, int j, int s);

// Precomputed l_{i,j}(s) for every row pair and symbol, cycle structures per
// pair, and the set of ordered pairs attaining the lexicographically maximum
// structure. l_{i,j}(s) = l_{j,i}(s), so storage is per unordered pair.
class CycleTable {
 public:
  explicit CycleTable(const LatinSquare& L);

  int order() const { return n_; }
  int ell(int i, int j, int s) const {
    return ell_[static_cast<size_t>(pair_index(i, j)) * n_ + (s - 1)];
  }
  const CycleStructure& gamma(int i, int j) const {
    return gammas_[pair_index(i, j)];
  }
  const CycleStructure& gamma_max() const { return gamma_max_; }
  // Both orientations of every pair attaining the maximum, in lexicographic
  // order on (i, j).
  const std::vector<std::pair<int, int>>& r_max() const { return r_max_; }

 private:
  int pair_index(int i, int j) const;

  int n_;
  std::vector<int> ell_;
  std::vector<CycleStructure> gammas_;
  CycleStructure gamma_max_;
  std::vector<std::pair<int, int>> r_max_;
};

inline CycleTable cycle_length_table(const LatinSquare& L) {
  return CycleTable(L);
}

// Length of the longest row cycle. Throws order_too_small for n < 2.
int longest_cycle(const LatinSquare& L);

// Number of unordered row pairs whose permutation is a single n-cycle.
int hamiltonian_count(const LatinSquare& L);

// Pre-allocation list for standard-form column blocks:
// p[k] = 1 + offset + sum of cycle lengths strictly greater than k.
// Index 1..n; p[0] unused.
std::vector<int> init_p(const CycleStructure& gamma, int offset, int n);

}  // namespace lsq
