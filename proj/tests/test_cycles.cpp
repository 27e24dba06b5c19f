#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "lsq/cycles.hpp"
#include "lsq/steiner.hpp"

using namespace lsq;

TEST_CASE("sigma is a derangement mapping row i to row j") {
  LatinSquare L = fixtures::z_square(5);
  std::vector<int> img = sigma(L, 1, 3);
  for (int c = 1; c <= 5; ++c) {
    CHECK(img[L.at(1, c)] == L.at(3, c));
  }
  for (int s = 1; s <= 5; ++s) CHECK(img[s] != s);
  CHECK_THROWS_AS(sigma(L, 2, 2), error);
}

TEST_CASE("cycle structures of the small group tables") {
  // cyclic order 4, adjacent rows: one 4-cycle
  CHECK(cycle_structure(fixtures::z_square(4), 1, 2).lengths ==
        std::vector<int>{4});
  // rows 1,3 of the cyclic table: shift by 2 = two 2-cycles
  CHECK(cycle_structure(fixtures::z_square(4), 1, 3).lengths ==
        std::vector<int>{2, 2});
  // Klein square: every row pair gives two 2-cycles
  LatinSquare K = fixtures::xor_square(4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      CHECK(cycle_structure(K, i, j).lengths == std::vector<int>{2, 2});
    }
  }
  CHECK(cycle_structure(fixtures::z_square(2), 1, 2).lengths ==
        std::vector<int>{2});
}

TEST_CASE("Fano quasigroup rows 1,2: singular 3-cycle plus a 2,2 pair") {
  LatinSquare S = sts_to_quasigroup(fixtures::fano());
  CHECK(cycle_structure(S, 1, 2).lengths == std::vector<int>{3, 2, 2});
}

TEST_CASE("lex order on cycle structures") {
  CycleStructure a{{4, 2}};
  CycleStructure b{{4, 1, 1}};
  CHECK(lex_less(b, a));
  CHECK(!lex_less(a, b));
  CHECK(lex_less(CycleStructure{{3, 3}}, CycleStructure{{4, 2}}));
  CHECK(!lex_less(a, a));
}

TEST_CASE("row_cycle_of walks the cycle containing s") {
  LatinSquare L = fixtures::z_square(4);
  RowCycle cyc = row_cycle_of(L, 1, 3, 1);
  CHECK(cyc.length == 2);
  CHECK(cyc.symbols == std::vector<int>{1, 3});
  // columns pair with the symbols: L[1][b] = s
  for (int k = 0; k < cyc.length; ++k) {
    CHECK(L.at(1, cyc.columns[k]) == cyc.symbols[k]);
  }
}

TEST_CASE("cycle table matches per-pair recomputation") {
  LatinSquare S = sts_to_quasigroup(fixtures::sts9());
  CycleTable table(S);
  for (int i = 1; i <= 9; ++i) {
    for (int j = i + 1; j <= 9; ++j) {
      CycleStructure g = cycle_structure(S, i, j);
      CHECK(table.gamma(i, j) == g);
      CHECK(table.gamma(j, i) == g);
      for (int s = 1; s <= 9; ++s) {
        CHECK(table.ell(i, j, s) == row_cycle_of(S, i, j, s).length);
      }
      CHECK(!lex_less(table.gamma_max(), g));
    }
  }
  for (auto [i, j] : table.r_max()) {
    CHECK(table.gamma(i, j) == table.gamma_max());
  }
}

TEST_CASE("Klein square: every ordered pair attains the maximum") {
  CycleTable table(fixtures::xor_square(4));
  CHECK(table.gamma_max().lengths == std::vector<int>{2, 2});
  CHECK(table.r_max().size() == 12);  // both orientations of all 6 pairs
}

TEST_CASE("hamiltonian counts of the cyclic tables") {
  CHECK(hamiltonian_count(fixtures::z_square(5)) == 10);  // all pairs, n prime
  CHECK(hamiltonian_count(fixtures::z_square(4)) == 4);   // odd shifts only
  CHECK(hamiltonian_count(fixtures::xor_square(4)) == 0);
  CHECK_THROWS_AS(hamiltonian_count(fixtures::z_square(1)), error);
  CHECK_THROWS_AS(longest_cycle(fixtures::z_square(1)), error);
  CHECK(longest_cycle(fixtures::z_square(4)) == 4);
  CHECK(longest_cycle(fixtures::xor_square(4)) == 2);
}

TEST_CASE("pre-allocation list from a cycle structure") {
  // lengths 4,2,2 in an order-8 square: cycles longer than k start after
  // offset + 1 positions
  std::vector<int> p = init_p(CycleStructure{{4, 2, 2}}, 0, 8);
  CHECK(p[1] == 9);  // 1 + 4+2+2
  CHECK(p[2] == 5);  // 1 + 4
  CHECK(p[3] == 5);
  CHECK(p[4] == 1);
  CHECK(p[5] == 1);
  std::vector<int> q = init_p(CycleStructure{{2, 2}}, 3, 9);
  CHECK(q[2] == 4);  // offset 3, no longer cycle
  CHECK(q[1] == 8);  // 1 + 3 + 4
}
