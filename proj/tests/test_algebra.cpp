#include "gcond/algebra.hpp"

#include "gcond/errors.hpp"
#include "gcond/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace gcond;

namespace {

Rational rand_rational(RandomSource& rng) {
  long num = static_cast<long>(rng.below(9)) - 4;   // -4..4, zeros included
  long den = 1 + static_cast<long>(rng.below(4));
  return Rational(num, den);
}

TriangularArray random_array(int n, RandomSource& rng) {
  TriangularArray t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t.set(i, j, rand_rational(rng));
  return t;
}

SquareMatrix random_matrix(int n, RandomSource& rng) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, rand_rational(rng));
  return m;
}

}  // namespace

TEST_CASE("one-factor enumeration has double-factorial counts") {
  CHECK(enumerate_one_factors(2).size() == 1);
  CHECK(enumerate_one_factors(4).size() == 3);
  CHECK(enumerate_one_factors(6).size() == 15);
  CHECK(enumerate_one_factors(8).size() == 105);
  CHECK_THROWS_AS(enumerate_one_factors(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_one_factors(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_one_factors(14), ResourceLimitError);

  auto fs = enumerate_one_factors(6);
  std::set<OneFactor> distinct(fs.begin(), fs.end());
  CHECK(distinct.size() == fs.size());
}

TEST_CASE("crossing numbers count interleaved chords") {
  CHECK(crossing_number({{{0, 1}, {2, 3}}}) == 0);
  CHECK(crossing_number({{{0, 2}, {1, 3}}}) == 1);
  CHECK(crossing_number({{{0, 3}, {1, 4}, {2, 5}}}) == 3);
  CHECK(crossing_number({{{0, 5}, {1, 2}, {3, 4}}}) == 0);   // nested is crossing-free
  CHECK(crossing_number({{{0, 1}}}) == 0);
}

TEST_CASE("swapping a sequential pair of pairs into interleaved flips the sign") {
  RandomSource rng(23);
  int tested = 0;
  while (tested < 50) {
    auto fs = enumerate_one_factors(8);
    const OneFactor& f = fs[rng.below(fs.size())];
    for (size_t x = 0; x < f.pairs.size() && tested < 50; ++x)
      for (size_t y = 0; y < f.pairs.size() && tested < 50; ++y) {
        if (x == y) continue;
        auto [i, j] = f.pairs[x];
        auto [k, l] = f.pairs[y];
        if (!(i < j && j < k && k < l)) continue;
        OneFactor swapped = f;
        swapped.pairs[x] = {i, k};
        swapped.pairs[y] = {j, l};
        CHECK((crossing_number(f) + crossing_number(swapped)) % 2 == 1);
        ++tested;
      }
  }
}

TEST_CASE("triangular arrays enforce the strict upper triangle") {
  TriangularArray t(4);
  t.set(0, 3, Rational(5));
  CHECK(t.at(0, 3) == 5);
  CHECK(t.at(1, 2) == 0);
  CHECK_THROWS_AS(t.at(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(t.at(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.at(0, 4), std::invalid_argument);
}

TEST_CASE("pfaffian base cases") {
  TriangularArray t2(2);
  t2.set(0, 1, Rational(7, 3));
  CHECK(pfaffian(t2) == Rational(7, 3));

  TriangularArray t4(4);
  // entries chosen so every term is distinct
  t4.set(0, 1, 2);
  t4.set(2, 3, 3);
  t4.set(0, 2, 5);
  t4.set(1, 3, 7);
  t4.set(0, 3, 11);
  t4.set(1, 2, 13);
  CHECK(pfaffian(t4) == Rational(2 * 3 - 5 * 7 + 11 * 13));

  TriangularArray odd(3);
  CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
  CHECK(pfaffian(TriangularArray(0)) == 1);
}

TEST_CASE("pfaffian agrees with the test-side pairing oracle") {
  RandomSource rng(101);
  for (int n : {4, 6, 8})
    for (int rep = 0; rep < 10; ++rep) {
      TriangularArray t = random_array(n, rng);
      CHECK(pfaffian(t) == oracle::pfaffian_by_pairings(t));
    }
}

TEST_CASE("determinant base cases and oracle agreement") {
  CHECK(determinant(SquareMatrix::identity(4)) == 1);

  SquareMatrix m2(2);
  m2.set(0, 0, Rational(1, 2));
  m2.set(0, 1, 3);
  m2.set(1, 0, 5);
  m2.set(1, 1, Rational(2, 7));
  CHECK(determinant(m2) == Rational(1, 2) * Rational(2, 7) - Rational(15));

  SquareMatrix singular(3);
  for (int j = 0; j < 3; ++j) {
    singular.set(0, j, j + 1);
    singular.set(1, j, 2 * (j + 1));
    singular.set(2, j, j);
  }
  CHECK(determinant(singular) == 0);

  RandomSource rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    SquareMatrix m = random_matrix(5, rng);
    CHECK(determinant(m) == oracle::determinant_by_cofactors(m));
  }
  // Above the permutation-sum cap only elimination runs; still exact.
  for (int rep = 0; rep < 5; ++rep) {
    SquareMatrix m = random_matrix(8, rng);
    CHECK(determinant(m) == oracle::determinant_by_cofactors(m));
  }
}

TEST_CASE("block-sparse pfaffians collapse to determinants") {
  SUBCASE("dimension two") {
    TriangularArray t(2);
    t.set(0, 1, Rational(9, 4));
    auto [pf, det] = pfaffian_collapses_to_determinant(t);
    CHECK(pf == Rational(9, 4));
    CHECK(det == Rational(9, 4));
  }
  SUBCASE("random cross-block arrays") {
    RandomSource rng(77);
    for (int n : {4, 6})
      for (int rep = 0; rep < 10; ++rep) {
        TriangularArray t(n);
        for (int i = 0; i < n / 2; ++i)
          for (int j = n / 2; j < n; ++j) t.set(i, j, rand_rational(rng));
        auto [pf, det] = pfaffian_collapses_to_determinant(t);
        CHECK(pf == det);
        CHECK(pf == oracle::pfaffian_by_pairings(t));
      }
  }
  SUBCASE("sparsity precondition is checked") {
    TriangularArray t(4);
    t.set(0, 1, 1);   // inside the first half
    CHECK_THROWS_AS(pfaffian_collapses_to_determinant(t), std::invalid_argument);
  }
}
