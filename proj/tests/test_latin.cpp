#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lsq/latin.hpp"

using namespace lsq;

TEST_CASE("validate accepts group tables") {
  CHECK(fixtures::z_square(3).order() == 3);
  CHECK(fixtures::xor_square(4).at(2, 3) == 4);
  CHECK(fixtures::z_square(1).at(1, 1) == 1);
}

TEST_CASE("validate pinpoints the first violation") {
  CHECK_THROWS_WITH_AS(LatinSquare::validate(2, {1, 2, 2, 3}),
                       doctest::Contains("out of range"), error);
  try {
    LatinSquare::validate(2, {1, 1, 2, 2});
    FAIL("expected throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::duplicate_in_row);
  }
  try {
    LatinSquare::validate(3, {1, 2, 3, 2, 3, 1, 1, 2, 3});
    FAIL("expected throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::duplicate_in_column);
  }
  CHECK_THROWS_AS(LatinSquare::validate(2, {1, 2, 2}), error);
}

TEST_CASE("exactly two 2x2 squares among all 81 candidate grids") {
  int accepted = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          try {
            LatinSquare::validate(2, {a, b, c, d});
            ++accepted;
          } catch (const error&) {
          }
        }
  CHECK(accepted == 2);
}

TEST_CASE("position inverses agree with the grid") {
  LatinSquare L = fixtures::z_square(5);
  for (int r = 1; r <= 5; ++r) {
    for (int c = 1; c <= 5; ++c) {
      int s = L.at(r, c);
      CHECK(L.column_of(r, s) == c);
      CHECK(L.row_of(c, s) == r);
    }
  }
}

TEST_CASE("partial permutations") {
  PartialPermutation pi = PartialPermutation::empty(3);
  CHECK(pi.star() == 4);
  CHECK(!pi.labelled(1));
  CHECK(!pi.complete());
  pi = PartialPermutation::from_image(3, {0, 2, 3, 1});
  CHECK(pi.complete());
  PartialPermutation inv = pi.inverse();
  CHECK(inv(2) == 1);
  CHECK(inv(1) == 3);
  CHECK(PartialPermutation::identity(4)(3) == 3);
}

TEST_CASE("apply_labelling produces the star-padded array") {
  LatinSquare L = fixtures::z_square(3);
  PartialLabelling phi = PartialLabelling::empty(3);
  phi.alpha.image[1] = 1;
  phi.alpha.size = 1;
  phi.beta.image[2] = 1;
  phi.beta.size = 1;
  phi.gamma.image[2] = 1;
  phi.gamma.size = 1;
  PartialArray A = apply_labelling(L, phi);
  CHECK(A.k == 1);
  CHECK(A.at(1, 1) == 1);  // L[1][2] = 2, gamma(2) = 1

  phi.gamma = PartialPermutation::empty(3);
  phi.gamma.image[3] = 1;
  phi.gamma.size = 1;
  A = apply_labelling(L, phi);
  CHECK(A.at(1, 1) == A.star);
}

TEST_CASE("apply_isotopism round trips through the inverse") {
  LatinSquare L = fixtures::xor_square(4);
  PartialLabelling phi = PartialLabelling::empty(4);
  phi.alpha = PartialPermutation::from_image(4, {0, 2, 3, 4, 1});
  phi.beta = PartialPermutation::from_image(4, {0, 4, 3, 2, 1});
  phi.gamma = PartialPermutation::from_image(4, {0, 1, 3, 2, 4});
  LatinSquare M = apply_isotopism(L, phi);
  CHECK(M != L);
  PartialLabelling inv;
  inv.alpha = phi.alpha.inverse();
  inv.beta = phi.beta.inverse();
  inv.gamma = phi.gamma.inverse();
  CHECK(apply_isotopism(M, inv) == L);
  // isomorphism shortcut agrees with the triple form
  PartialLabelling iso;
  iso.alpha = iso.beta = iso.gamma = phi.alpha;
  CHECK(apply_isomorphism(L, phi.alpha) == apply_isotopism(L, iso));
}

TEST_CASE("lex_compare orders squares row-major") {
  LatinSquare a = LatinSquare::validate(2, {1, 2, 2, 1});
  LatinSquare b = LatinSquare::validate(2, {2, 1, 1, 2});
  CHECK(lex_compare(a, b) == Ordering::LT);
  CHECK(lex_compare(b, a) == Ordering::GT);
  CHECK(lex_compare(a, a) == Ordering::EQ);
  CHECK_THROWS_AS(lex_compare(a, fixtures::z_square(3)), error);
}

TEST_CASE("conjugates are Latin and the roles invert") {
  LatinSquare L = fixtures::z_square(5);
  for (const Conjugation& sigma : kConjugations) {
    LatinSquare M = conjugate(L, sigma);
    CHECK(M.order() == 5);
    // applying the inverse role permutation restores L
    Conjugation inv{};
    for (int k = 0; k < 3; ++k) inv[sigma[k]] = k;
    CHECK(conjugate(M, inv) == L);
  }
  CHECK(conjugate(L, kConjugations[0]) == L);
  // transpose of a symmetric square is itself
  CHECK(conjugate(fixtures::xor_square(4), kConjugations[2]) ==
        fixtures::xor_square(4));
}

TEST_CASE("text round trip") {
  LatinSquare L = fixtures::z_square(4);
  CHECK(parse(serialize(L)) == L);
  CHECK(serialize(fixtures::z_square(2)) == "1 2\n2 1\n");
  CHECK_THROWS_AS(parse("1 2\n2"), error);
  CHECK_THROWS_AS(parse("1 x\n2 1"), error);
  CHECK_THROWS_AS(parse(""), error);
}

TEST_CASE("compact round trip") {
  LatinSquare L = fixtures::z_square(12);
  CHECK(parse_compact(serialize_compact(L)) == L);
  CHECK(serialize_compact(fixtures::z_square(2)) == "2:1221");
  CHECK(parse_compact("2:1221") == fixtures::z_square(2));
  CHECK_THROWS_AS(parse_compact("2:12"), error);
  CHECK_THROWS_AS(parse_compact("banana"), error);
}
