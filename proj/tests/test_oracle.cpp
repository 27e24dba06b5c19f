#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "lsq/canonical.hpp"
#include "lsq/oracle.hpp"
#include "lsq/sampler.hpp"

using namespace lsq;

TEST_CASE("brute isotopism on the small fixtures") {
  LatinSquare Z3 = fixtures::z_square(3);
  // swap two columns of Z3
  PartialLabelling phi = PartialLabelling::identity(3);
  std::swap(phi.beta.image[1], phi.beta.image[3]);
  CHECK(brute_isotopic(Z3, apply_isotopism(Z3, phi)));
  CHECK(brute_isotopic(Z3, Z3));
  CHECK(!brute_isotopic(fixtures::z_square(4), fixtures::xor_square(4)));
  CHECK_THROWS_AS(brute_isotopic(fixtures::z_square(7), fixtures::z_square(7)),
                  error);
  CHECK_THROWS_AS(brute_isotopic(Z3, fixtures::z_square(4)), error);
}

TEST_CASE("brute isotopism is an equivalence relation in practice") {
  std::vector<LatinSquare> squares;
  for (int k = 0; k < 4; ++k) squares.push_back(jm_sample(4, 100 + k));
  for (const auto& a : squares) {
    CHECK(brute_isotopic(a, a));
    for (const auto& b : squares) {
      CHECK(brute_isotopic(a, b) == brute_isotopic(b, a));
    }
  }
  for (const auto& a : squares)
    for (const auto& b : squares)
      for (const auto& c : squares) {
        if (brute_isotopic(a, b) && brute_isotopic(b, c)) {
          CHECK(brute_isotopic(a, c));
        }
      }
}

TEST_CASE("brute force agrees with the canonical engine at order 5") {
  Rng rng(55);
  for (int k = 0; k < 20; ++k) {
    LatinSquare a = jm_sample(5, 500 + k);
    LatinSquare b = (k % 2 == 0)
                        ? apply_isotopism(a, random_isotopism(5, rng))
                        : jm_sample(5, 900 + k);
    CHECK(brute_isotopic(a, b) == same_isotopism_class(a, b));
  }
}

TEST_CASE("exhaustive order-4 generation") {
  CHECK(all_latin_squares(1).size() == 1);
  CHECK(all_latin_squares(2).size() == 2);
  CHECK(all_latin_squares(3).size() == 12);
  CHECK(all_latin_squares(4).size() == 576);
  CHECK_THROWS_AS(all_latin_squares(5), error);
}

TEST_CASE("subsquare closures on the group tables") {
  SubsquareReport K = enumerate_subsquares(fixtures::xor_square(4));
  CHECK(K.largest_proper == 2);
  CHECK(K.subsquares.size() == 12);  // the maximum possible intercalate count
  for (const Subsquare& sq : K.subsquares) {
    CHECK(sq.order == 2);
    CHECK(sq.rows.size() == 2);
    CHECK(sq.columns.size() == 2);
    CHECK(sq.symbols.size() == 2);
    // the induced 2x2 block really is a subsquare
    LatinSquare L = fixtures::xor_square(4);
    CHECK(L.at(sq.rows[0], sq.columns[0]) == L.at(sq.rows[1], sq.columns[1]));
    CHECK(L.at(sq.rows[0], sq.columns[1]) == L.at(sq.rows[1], sq.columns[0]));
  }

  SubsquareReport Z = enumerate_subsquares(fixtures::z_square(3));
  CHECK(Z.largest_proper == 1);
  CHECK(Z.subsquares.empty());

  CHECK(enumerate_subsquares(fixtures::xor_square(8)).largest_proper == 4);
  // beyond n = 8 closures are a lower bound: a 2x2 seed in the order-16
  // table generates a subspace of dimension at most 2, never the order-8
  // subgroup square
  CHECK(enumerate_subsquares(fixtures::xor_square(16)).largest_proper == 4);
}

TEST_CASE("closure and exhaustive subsquare search agree for n <= 8") {
  std::vector<LatinSquare> cases = {
      fixtures::z_square(4), fixtures::xor_square(4), fixtures::z_square(8),
      fixtures::xor_square(8), fixtures::z_square(5)};
  for (int k = 0; k < 10; ++k) cases.push_back(jm_sample(4 + k % 5, 70 + k));
  for (const LatinSquare& L : cases) {
    CHECK(enumerate_subsquares(L).largest_proper ==
          largest_proper_exhaustive(L));
  }
  CHECK_THROWS_AS(largest_proper_exhaustive(fixtures::z_square(9)), error);
}

TEST_CASE("brute Steiner isomorphism") {
  BlockSet fano = fixtures::fano();
  Rng rng(21);
  PartialPermutation pi = random_permutation(7, rng);
  CHECK(brute_isomorphic_sts(fano, fixtures::relabel(fano, pi.image)));
  CHECK(brute_isomorphic_sts(fano, fano));
  CHECK(brute_isomorphic_sts(fixtures::sts9(),
                             fixtures::relabel(fixtures::sts9(),
                                               random_permutation(9, rng)
                                                   .image)));
  CHECK_THROWS_AS(brute_isomorphic_sts(fano, fixtures::sts9()), error);
}

TEST_CASE("one-factorisation enumeration at small orders") {
  CHECK(all_one_factorisations(2).size() == 1);
  CHECK(all_one_factorisations(4).size() == 1);
  CHECK(all_one_factorisations(6).size() == 6);
  CHECK_THROWS_AS(all_one_factorisations(10), error);
  // factor k always contains the edge {1, k+1}
  for (const FactorSet& F : all_one_factorisations(6)) {
    for (int k = 0; k < 5; ++k) {
      bool found = false;
      for (auto [a, b] : F.factors[k]) {
        if (a == 1 && b == k + 2) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("brute one-factorisation classes") {
  std::vector<FactorSet> k6 = all_one_factorisations(6);
  CHECK(count_1f_classes_brute(k6) == 1);
  CHECK(brute_isomorphic_1f(k6[0], k6[5]));
  CHECK(count_1f_classes_brute({fixtures::k4_factorisation()}) == 1);
  CHECK_THROWS_AS(
      brute_isomorphic_1f(k6[0], fixtures::k4_factorisation()), error);
}

TEST_CASE("structure probe runs and reports sane rows") {
  ProbeReport report = longest_cycle_vs_subsquare(8, 7, 2026);
  CHECK(report.order == 8);
  CHECK(report.rows.size() == 7);
  for (const ProbeRow& row : report.rows) {
    CHECK(row.longest_cycle >= 2);
    CHECK(row.longest_cycle <= 8);
    CHECK(row.largest_proper >= 1);
    CHECK(row.largest_proper <= 4);
  }
  CHECK(report.fraction_exceeding >= 0.0);
  CHECK(report.fraction_exceeding <= 1.0);
  CHECK_THROWS_AS(longest_cycle_vs_subsquare(61, 1, 1), error);
  // the worst-case fixture: short cycles, large subsquare
  LatinSquare E = fixtures::xor_square(8);
  CHECK(longest_cycle(E) == 2);
  CHECK(enumerate_subsquares(E).largest_proper == 4);
}
