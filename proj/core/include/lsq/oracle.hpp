#pragma once

#include <cstdint>
#include <vector>

#include "lsq/latin.hpp"
#include "lsq/onefact.hpp"
#include "lsq/steiner.hpp"

namespace lsq {

// Exhaustive isotopism test: enumerate alpha and beta, derive the unique
// candidate gamma from row 1, verify globally. Throws order_too_large for
// n > 6 and order_mismatch on unequal orders.
bool brute_isotopic(const LatinSquare& L1, const LatinSquare& L2);

struct Subsquare {
  std::vector<int> rows;     // ascending
  std::vector<int> columns;  // ascending
  std::vector<int> symbols;  // ascending
  int order = 0;

  bool operator==(const Subsquare& other) const = default;
};

struct SubsquareReport {
  std::vector<Subsquare> subsquares;  // order >= 2, proper, deduplicated
  int largest_proper = 1;             // 1 when no proper subsquare of order >= 2
};

// Subsquares found as Latin closures of every 2-row/2-column seed, abandoning
// closures that exceed order n/2 (no proper subsquare is larger). Complete
// for every case cross-checked exhaustively at n <= 8; a lower bound on
// largest_proper beyond that.
SubsquareReport enumerate_subsquares(const LatinSquare& L);

// Ground truth for n <= 8: checks every row subset of size 2..n/2 against
// every same-size column subset. Throws order_too_large for n > 8.
int largest_proper_exhaustive(const LatinSquare& L);

// Exhaustive point-permutation test. Throws order_too_large for n > 9 and
// order_mismatch on unequal point counts.
bool brute_isomorphic_sts(const BlockSet& B1, const BlockSet& B2);

// Every Latin square of order n (all n!^? grids, by row-wise backtracking).
// Throws order_too_large for n > 4.
std::vector<LatinSquare> all_latin_squares(int n);

// Every 1-factorisation of K_v, each in the canonical factor order where
// factor k contains the edge {1, k+1}. Throws order_too_large for v > 8.
std::vector<FactorSet> all_one_factorisations(int v);

// Exhaustive vertex-permutation test (factor order ignored). Throws
// order_too_large for v > 8 and order_mismatch on unequal vertex counts.
bool brute_isomorphic_1f(const FactorSet& F1, const FactorSet& F2);

// Number of isomorphism classes among the given factorisations, computed by
// exhausting each class representative's vertex-relabelling orbit.
int count_1f_classes_brute(const std::vector<FactorSet>& all);

struct ProbeRow {
  int longest_cycle = 0;
  int largest_proper = 0;
};

struct ProbeReport {
  int order = 0;
  std::vector<ProbeRow> rows;       // one per sampled square
  double fraction_exceeding = 0.0;  // longest_cycle > largest_proper
};

// Samples `samples` squares of order n from the Jacobson-Matthews chain and
// tabulates the longest row-cycle length against the largest proper
// subsquare order. Throws order_too_large for n > 60.
ProbeReport longest_cycle_vs_subsquare(int n, int samples, std::uint64_t seed,
                                       int jobs = 1);

}  // namespace lsq
