#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "checkers.hpp"
#include "fixtures.hpp"
#include "lsq/canonical.hpp"
#include "lsq/sampler.hpp"

using namespace lsq;

TEST_CASE("cell successor sweeps growing top-left blocks") {
  // from (1,1): finish the 2x2 block before touching column 3
  std::vector<std::pair<int, int>> seq = {{1, 1}};
  for (int k = 0; k < 8; ++k) {
    auto [x, y] = seq.back();
    seq.push_back(succ(x, y));
  }
  std::vector<std::pair<int, int>> expected = {{1, 1}, {1, 2}, {2, 2}, {2, 1},
                                               {1, 3}, {2, 3}, {3, 3}, {3, 2},
                                               {3, 1}};
  CHECK(seq == expected);
}

TEST_CASE("labelling one cycle of the cyclic square, rows (1,2)") {
  LatinSquare L = fixtures::z_square(3);
  SearchState state(L, 1, 2);
  CHECK(state.curt() == 0);
  CHECK(state.ell(1) == 3);
  CHECK(state.p()[3] == 1);
  state.label_row_cycle(2);
  CHECK(state.curt() == 3);
  CHECK(state.c1() == 2);
  // alpha is the identity; beta and gamma send 1,2,3 to 3,1,2
  CHECK(state.alpha()[1] == 1);
  CHECK(state.alpha()[2] == 2);
  CHECK(state.alpha()[3] == 3);
  CHECK(state.beta()[1] == 3);
  CHECK(state.beta()[2] == 1);
  CHECK(state.beta()[3] == 2);
  CHECK(state.gamma() == state.beta());
  CHECK_THROWS_AS(state.label_row_cycle(2), error);

  Candidate best;
  state.offer_leaf(best);
  CHECK(best.grid == fixtures::z_square(3).cells());
}

TEST_CASE("checkpoint and rollback restore the state exactly") {
  LatinSquare L = fixtures::z_square(4);
  SearchState state(L, 1, 2);
  std::vector<int> p0 = state.p();
  SearchState::Checkpoint cp = state.checkpoint();
  state.label_row_cycle(3);
  state.extend();
  CHECK(state.curt() == 4);
  state.rollback(cp);
  CHECK(state.curt() == 0);
  CHECK(state.p() == p0);
  for (int s = 1; s <= 4; ++s) {
    CHECK(state.gamma()[s] == state.star());
    CHECK(state.alpha()[s] == state.star());
    CHECK(state.beta()[s] == state.star());
  }
  // the search still works after rollback
  Candidate best;
  branch(state, best);
  CHECK(best.valid);
}

TEST_CASE("leaf counts of single-pair searches") {
  auto leaves = [](const LatinSquare& L, int i, int j) {
    SearchState state(L, i, j);
    Candidate best;
    branch(state, best);
    return state.stats().leaves;
  };
  CHECK(leaves(fixtures::z_square(3), 1, 2) == 3);
  CHECK(leaves(fixtures::z_square(4), 1, 2) == 4);
  CHECK(leaves(fixtures::xor_square(4), 1, 2) == 8);
}

TEST_CASE("branching candidates are the longest unlabelled cycles") {
  LatinSquare L = fixtures::z_square(4);
  SearchState state(L, 1, 3);  // cycles (1 3), (2 4)
  std::vector<int> symbols = state.longest_unlabelled_symbols();
  CHECK(symbols == std::vector<int>{1, 2, 3, 4});
  state.label_row_cycle(1);
  symbols = state.longest_unlabelled_symbols();
  CHECK(symbols == std::vector<int>{2, 4});
}

TEST_CASE("the cyclic square is its own canonical form") {
  CanonicalResult res = canonical_labelling(fixtures::z_square(3));
  CHECK(res.form == fixtures::z_square(3));
  CHECK(res.labelling.complete());
  CHECK(apply_isotopism(fixtures::z_square(3), res.labelling) == res.form);
}

TEST_CASE("canonical form is invariant under isotopisms") {
  Rng rng(2024);
  for (int n : {4, 5, 6, 7}) {
    LatinSquare L = jm_sample(n, 77 + n);
    LatinSquare form = canonical_labelling(L).form;
    CHECK(checkers::in_candidate_set(form, L));
    for (int rep = 0; rep < 5; ++rep) {
      LatinSquare M = apply_isotopism(L, random_isotopism(n, rng));
      CanonicalResult res = canonical_labelling(M);
      CHECK(res.form == form);
      CHECK(apply_isotopism(M, res.labelling) == res.form);
    }
  }
}

TEST_CASE("canonical labelling maps the input onto the form") {
  LatinSquare L = jm_sample(8, 5);
  CanonicalResult res = canonical_labelling(L);
  CHECK(apply_isotopism(L, res.labelling) == res.form);
  CHECK(res.stats.doubling_violations == 0);
}

TEST_CASE("thread split does not change the result") {
  LatinSquare L = fixtures::xor_square(8);
  CanonicalResult a = canonical_labelling(L, 1);
  CanonicalResult b = canonical_labelling(L, 3);
  CHECK(a.form == b.form);
  CHECK(a.stats.leaves == b.stats.leaves);
}

TEST_CASE("distinct classes at order 4") {
  CHECK(!same_isotopism_class(fixtures::z_square(4), fixtures::xor_square(4)));
  CHECK(same_isotopism_class(fixtures::z_square(4), fixtures::z_square(4)));
  CHECK_THROWS_AS(
      same_isotopism_class(fixtures::z_square(3), fixtures::z_square(4)),
      error);
}

TEST_CASE("species form is invariant under conjugation and isotopism") {
  LatinSquare L = jm_sample(6, 31);
  LatinSquare form = species_canonical(L);
  Rng rng(7);
  for (const Conjugation& sigma : kConjugations) {
    LatinSquare M = conjugate(L, sigma);
    M = apply_isotopism(M, random_isotopism(6, rng));
    CHECK(species_canonical(M) == form);
  }
}

TEST_CASE("order one is its own canonical form") {
  LatinSquare L = LatinSquare::validate(1, {1});
  CHECK(canonical_labelling(L).form == L);
}
