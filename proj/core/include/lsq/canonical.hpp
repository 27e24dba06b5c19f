#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lsq/cycles.hpp"
#include "lsq/latin.hpp"

namespace lsq {

// Successor order on cells: visits all cells of each k x k top-left block
// before any cell outside it.
inline std::pair<int, int> succ(int x, int y) {
  if (y <= 1) return {1, x + 1};
  if (x + 1 <= y) return {x + 1, y};
  return {x, y - 1};
}

struct SearchStats {
  std::uint64_t leaves = 0;
  std::uint64_t doubling_violations = 0;
  int max_depth = 0;

  void merge(const SearchStats& other) {
    leaves += other.leaves;
    doubling_violations += other.doubling_violations;
    if (other.max_depth > max_depth) max_depth = other.max_depth;
  }
};

// A completed labelling and the square it produces, kept as the incumbent
// minimum during the search.
struct Candidate {
  bool valid = false;
  std::vector<int> grid;  // row-major completed square
  std::vector<int> alpha, beta, gamma;
};

// Live canonicalization state for one ordered pair (i, j): the partial
// labelling, the pre-allocation list P, curt, the T-lists recording
// labelling order, and an undo log of labelled cycle lengths. Owned by a
// single search; backtracking rolls everything back to a checkpoint.
class SearchState {
 public:
  struct UnipotentSeed {};  // tag: seed for unipotent symmetric squares

  // General Latin square search: empty labelling, P from the cycle
  // structure of rows (i, j) with offset 0.
  SearchState(const LatinSquare& L, int i, int j);
  // Unipotent symmetric variant: seeds alpha(i)=beta(i)=1, alpha(j)=beta(j)=2,
  // gamma(1)=1, gamma(L[i][j])=2, and initializes P ignoring the 2-cycle on
  // the unipotent elements with offset 2.
  SearchState(const LatinSquare& L, int i, int j, UnipotentSeed);

  const LatinSquare& square() const { return L_; }
  int order() const { return n_; }
  int row_i() const { return i_; }
  int row_j() const { return j_; }
  int curt() const { return curt_; }
  int c1() const { return c1_; }
  int star() const { return n_ + 1; }
  int ell(int s) const { return ell_[s]; }

  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& beta() const { return beta_; }
  const std::vector<int>& gamma() const { return gamma_; }
  const std::vector<int>& p() const { return p_; }
  const std::vector<int>& t_alpha() const { return t_alpha_; }
  const std::vector<int>& t_beta() const { return t_beta_; }
  const std::vector<int>& t_gamma() const { return t_gamma_; }

  PartialLabelling labelling() const;

  // Maps the row cycle containing s to standard form starting at column
  // P[l]; throws already_labelled if gamma(s) is assigned.
  void label_row_cycle(int s);

  // Scans forward in succ order from the most recently labelled cycle,
  // labelling the preimage of every star found, until the labelled region
  // is a Latin square.
  void extend();

  // Symbols in the longest row cycles of r_i u r_j not yet labelled.
  // Ascending symbol order; empty iff every cycle is labelled.
  std::vector<int> longest_unlabelled_symbols() const;

  struct Checkpoint {
    int curt;
    size_t cycles;
    int c1;
  };
  Checkpoint checkpoint() const {
    return {curt_, cycle_log_.size(), c1_};
  }
  void rollback(const Checkpoint& cp);

  // Compares the completed square against the incumbent and replaces it if
  // lexicographically smaller (or the incumbent is empty). Requires
  // curt() == order().
  void offer_leaf(Candidate& best);

  SearchStats& stats() { return stats_; }

 private:
  void init_rows(int i, int j);

  const LatinSquare& L_;
  int n_;
  int i_, j_;
  std::vector<int> ell_;  // symbol -> cycle length in r_i u r_j
  std::vector<int> alpha_, beta_, gamma_;           // element -> label
  std::vector<int> alpha_inv_, beta_inv_, gamma_inv_;  // label -> element
  std::vector<int> p_;
  std::vector<int> t_alpha_, t_beta_, t_gamma_;  // index 1..curt
  std::vector<int> cycle_log_;                   // lengths, for undoing P
  int curt_ = 0;
  int c1_ = 0;
  SearchStats stats_;
};

// Procedure: search all labelling extensions below the current state,
// min-reducing completed squares into best. depth counts nested calls
// (the initial call has depth 1).
void branch(SearchState& state, Candidate& best, int depth = 1);

struct CanonicalResult {
  PartialLabelling labelling;
  LatinSquare form;
  SearchStats stats;
};

// Canonical labelling over all ordered pairs in R_max. The form is the
// lexicographically least completed square over all leaves: reduced, rows
// 1-2 in standard form, and identical for every member of the isotopism
// class. jobs > 1 distributes R_max pairs over threads.
CanonicalResult canonical_labelling(const LatinSquare& L, int jobs = 1);

// Throws order_mismatch on unequal orders.
bool same_isotopism_class(const LatinSquare& a, const LatinSquare& b);

// Lexicographically least canonical form over the six conjugates.
LatinSquare species_canonical(const LatinSquare& L, int jobs = 1);

}  // namespace lsq
