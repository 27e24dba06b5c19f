#pragma once

#include <array>
#include <string>
#include <vector>

#include "lsq/error.hpp"

namespace lsq {

enum class Ordering { LT, EQ, GT };

// A validated Latin square of order n over symbols 1..n, with eagerly built
// symbol->position inverses so that row/column lookups are O(1).
// Immutable after construction; safe to share across threads.
class LatinSquare {
 public:
  // Accepts exactly the square matrices whose rows and columns are
  // permutations of 1..n. Throws error with code duplicate_in_row,
  // duplicate_in_column or out_of_range, pinpointing the first violation
  // in row-major order.
  static LatinSquare validate(int n, std::vector<int> grid);
  static LatinSquare validate(const std::vector<std::vector<int>>& grid);

  int order() const { return n_; }

  // All indices and symbols are 1-based.
  int at(int r, int c) const { return grid_[(r - 1) * n_ + (c - 1)]; }
  // Column b with at(r, b) == s.
  int column_of(int r, int s) const { return row_pos_[(r - 1) * n_ + (s - 1)]; }
  // Row a with at(a, c) == s.
  int row_of(int c, int s) const { return col_pos_[(c - 1) * n_ + (s - 1)]; }

  const std::vector<int>& cells() const { return grid_; }

  bool operator==(const LatinSquare& other) const {
    return n_ == other.n_ && grid_ == other.grid_;
  }
  bool operator!=(const LatinSquare& other) const { return !(*this == other); }

 private:
  LatinSquare() = default;

  int n_ = 0;
  std::vector<int> grid_;     // row-major, values 1..n
  std::vector<int> row_pos_;  // (r, s) -> column
  std::vector<int> col_pos_;  // (c, s) -> row
};

// A map [n] -> [n] u {star}, injective on the preimage of [n]. The star
// sentinel is encoded as n+1, so the extended order with x < star for all
// x in [n] is the natural integer order.
struct PartialPermutation {
  int n = 0;
  std::vector<int> image;  // index 1..n; image[0] unused
  int size = 0;            // count of non-star entries

  static PartialPermutation empty(int n);
  static PartialPermutation identity(int n);
  static PartialPermutation from_image(int n, std::vector<int> image);

  int star() const { return n + 1; }
  bool labelled(int x) const { return image[x] != n + 1; }
  bool complete() const { return size == n; }
  int operator()(int x) const { return image[x]; }
  PartialPermutation inverse() const;  // requires complete()
};

// Row, column and symbol labels. An isotopism once all three are complete.
struct PartialLabelling {
  PartialPermutation alpha, beta, gamma;

  static PartialLabelling empty(int n);
  static PartialLabelling identity(int n);
  bool complete() const {
    return alpha.complete() && beta.complete() && gamma.complete();
  }
};

// The array induced by a partial labelling, restricted to the labelled rows
// and columns in label order. Entries are 1..n or the star sentinel.
struct PartialArray {
  int k = 0;
  int star = 0;  // sentinel value, n+1 of the source square
  std::vector<int> cells;  // k*k row-major

  int at(int r, int c) const { return cells[(r - 1) * k + (c - 1)]; }
};

// Applies (alpha, beta, gamma) to L. Throws size_mismatch if the three
// sizes differ.
PartialArray apply_labelling(const LatinSquare& L, const PartialLabelling& phi);

// Full-labelling shortcut; the result is a valid Latin square.
LatinSquare apply_isotopism(const LatinSquare& L, const PartialLabelling& phi);
// Applies the isomorphism (pi, pi, pi).
LatinSquare apply_isomorphism(const LatinSquare& L, const PartialPermutation& pi);

// Row-major word comparison under the extended order (star greatest).
// Throws dimension_mismatch on unequal dimensions.
Ordering lex_compare(const PartialArray& a, const PartialArray& b);
Ordering lex_compare(const LatinSquare& a, const LatinSquare& b);

// A conjugation permutes the roles in each (row, column, symbol) triple:
// the output triple u satisfies u[k] = t[perm[k]].
using Conjugation = std::array<int, 3>;

inline constexpr std::array<Conjugation, 6> kConjugations = {{
    {0, 1, 2},  // identity
    {0, 2, 1},  // swap column/symbol
    {1, 0, 2},  // transpose
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},  // swap row/symbol
}};

LatinSquare conjugate(const LatinSquare& L, const Conjugation& sigma);

// Text format: one row per line, space-separated decimal symbols.
LatinSquare parse(const std::string& text);
std::string serialize(const LatinSquare& L);

// One-line compact format "n:d1d2..." with base-(n+1) digits, n <= 35.
// Digits 1..9 then A..Z.
LatinSquare parse_compact(const std::string& text);
std::string serialize_compact(const LatinSquare& L);

}  // namespace lsq
