#pragma once

#include <array>
#include <vector>

#include "lsq/latin.hpp"
#include "lsq/onefact.hpp"
#include "lsq/steiner.hpp"

namespace fixtures {

// Cyclic group table: (x, y) -> (x - 1 + y - 1) mod n + 1.
inline lsq::LatinSquare z_square(int n) {
  std::vector<int> grid(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      grid[(x - 1) * n + (y - 1)] = (x - 1 + y - 1) % n + 1;
    }
  }
  return lsq::LatinSquare::validate(n, std::move(grid));
}

// Elementary abelian 2-group table (n a power of two): XOR of 0-based
// coordinates. Order 4 is the Klein four-group square.
inline lsq::LatinSquare xor_square(int n) {
  std::vector<int> grid(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      grid[(x - 1) * n + (y - 1)] = ((x - 1) ^ (y - 1)) + 1;
    }
  }
  return lsq::LatinSquare::validate(n, std::move(grid));
}

inline lsq::BlockSet fano() {
  return lsq::sts_validate(7, {{1, 2, 3},
                               {1, 4, 5},
                               {1, 6, 7},
                               {2, 4, 6},
                               {2, 5, 7},
                               {3, 4, 7},
                               {3, 5, 6}});
}

// The affine plane AG(2,3): points are pairs over Z3, blocks the 12 lines
// (triples summing to zero coordinate-wise when written as vectors).
inline lsq::BlockSet sts9() {
  auto id = [](int a, int b) { return 3 * a + b + 1; };
  std::vector<std::array<int, 3>> blocks;
  for (int a1 = 0; a1 < 3; ++a1) {
    for (int b1 = 0; b1 < 3; ++b1) {
      for (int a2 = a1; a2 < 3; ++a2) {
        for (int b2 = (a2 == a1 ? b1 + 1 : 0); b2 < 3; ++b2) {
          int a3 = (6 - a1 - a2) % 3;
          int b3 = (6 - b1 - b2) % 3;
          int p1 = id(a1, b1), p2 = id(a2, b2), p3 = id(a3, b3);
          if (p1 < p2 && p2 < p3) {
            blocks.push_back({p1, p2, p3});
          }
        }
      }
    }
  }
  return lsq::sts_validate(9, std::move(blocks));
}

// K4's unique 1-factorisation.
inline lsq::FactorSet k4_factorisation() {
  return lsq::of_validate(4, {{{1, 2}, {3, 4}},
                              {{1, 3}, {2, 4}},
                              {{1, 4}, {2, 3}}});
}

// Relabels points of a block set by a permutation image (index 1..n).
inline lsq::BlockSet relabel(const lsq::BlockSet& B,
                             const std::vector<int>& phi) {
  std::vector<std::array<int, 3>> blocks;
  for (const auto& b : B.blocks) {
    blocks.push_back({phi[b[0]], phi[b[1]], phi[b[2]]});
  }
  return lsq::sts_validate(B.n, std::move(blocks));
}

// Relabels vertices of a 1-factorisation (factor order kept).
inline lsq::FactorSet relabel(const lsq::FactorSet& F,
                              const std::vector<int>& phi) {
  std::vector<std::vector<std::pair<int, int>>> factors;
  for (const auto& factor : F.factors) {
    std::vector<std::pair<int, int>> f;
    for (auto [a, b] : factor) f.emplace_back(phi[a], phi[b]);
    factors.push_back(std::move(f));
  }
  return lsq::of_validate(F.v, std::move(factors));
}

}  // namespace fixtures
