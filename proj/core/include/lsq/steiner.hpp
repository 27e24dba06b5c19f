#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lsq/canonical.hpp"
#include "lsq/latin.hpp"

namespace lsq {

// A Steiner triple system on points 1..n: every unordered pair of points
// lies in exactly one block.
struct BlockSet {
  int n = 0;
  std::vector<std::array<int, 3>> blocks;  // each sorted ascending; list sorted

  bool operator==(const BlockSet& other) const = default;
};

// Throws pair_uncovered, pair_doubled or bad_order (n mod 6 not in {1,3}).
BlockSet sts_validate(int n, std::vector<std::array<int, 3>> blocks);

// x o x = x and x o y = z for {x,y,z} in B. The result is idempotent and
// totally symmetric.
LatinSquare sts_to_quasigroup(const BlockSet& B);
// Inverse direction; throws not_idempotent / not_totally_symmetric.
BlockSet quasigroup_to_sts(const LatinSquare& S);

bool is_steiner_square(const LatinSquare& L);

// Upper-triangle successor: visits (x, y) with x <= y column by column.
inline std::pair<int, int> succ_prime(int x, int y) {
  if (x > y) {
    throw error(errc::invalid_cell, "succ_prime needs x <= y", x, y);
  }
  if (x == y) return {1, y + 1};
  return {x + 1, y};
}

// Search state for the isomorphism (alpha, alpha, alpha) canonicalization
// of a Steiner quasigroup. Seeded with the singular cycle of the chosen
// row pair: alpha(i)=1, alpha(j)=2, alpha(i o j)=3, P offset 3.
class StsSearchState {
 public:
  StsSearchState(const LatinSquare& S, int i, int j);

  const LatinSquare& square() const { return L_; }
  int order() const { return n_; }
  int curt() const { return curt_; }
  int star() const { return n_ + 1; }
  int ell(int s) const { return ell_[s]; }
  bool singular(int s) const {
    return s == i_ || s == j_ || s == L_.at(i_, j_);
  }

  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& p() const { return p_; }
  const std::vector<int>& t_alpha() const { return t_alpha_; }

  // Labels the inverse pair (R, R') where R is the nonsingular row cycle
  // containing s; R becomes the left cycle and the pair is paired
  // increasing. Throws singular_symbol / already_labelled.
  void label_inverse_pair(int s);

  // Scans unexplored upper-triangle cells in succ_prime order, labelling
  // the inverse pair of every unlabelled symbol found.
  void extend();

  std::vector<int> longest_unlabelled_symbols() const;

  struct Checkpoint {
    int curt;
    size_t pairs;
  };
  Checkpoint checkpoint() const { return {curt_, pair_log_.size()}; }
  void rollback(const Checkpoint& cp);

  void offer_leaf(Candidate& best);  // uses alpha for all three coordinates

  SearchStats& stats() { return stats_; }

 private:
  const LatinSquare& L_;
  int n_;
  int i_, j_;
  std::vector<int> ell_;
  std::vector<int> alpha_;
  std::vector<int> alpha_inv_;
  std::vector<int> p_;
  std::vector<int> t_alpha_;  // index 1..curt, order of labelling
  std::vector<int> pair_log_;  // cycle lengths, for undoing P
  int curt_ = 0;
  SearchStats stats_;
};

void branch_sts(StsSearchState& state, Candidate& best, int depth = 1);

struct StsCanonicalResult {
  PartialPermutation alpha;
  LatinSquare form;
  SearchStats stats;
};

// Canonical isomorphism over all ordered pairs in R_max; the form is an
// idempotent totally symmetric square in paired standard form, identical
// for every member of the isomorphism class. Throws not_steiner.
StsCanonicalResult canonical_sts(const LatinSquare& S, int jobs = 1);

// The lifted representative: general canonical labelling, then apply
// (gamma, gamma, gamma). Also invariant on the isomorphism class.
LatinSquare canonical_sts_lifted(const LatinSquare& S, int jobs = 1);

// Block file format: first line n, then one block per line as three
// space-separated points.
BlockSet parse_blocks(const std::string& text);
std::string serialize_blocks(const BlockSet& B);

}  // namespace lsq
