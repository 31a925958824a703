#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cornered/coeffs.hpp"

using namespace cornered;

TEST_CASE("polynomial arithmetic over F2") {
  Poly p = Poly::one() + Poly::U(1);
  CHECK((p + p).is_zero());
  CHECK(Poly::one() + Poly::U(1) == p);
  CHECK((p + Poly::U(1)) == Poly::one());
  // char-2 binomial: cross terms cancel
  CHECK(p * p == Poly::one() + Poly::U(1, 2));
  CHECK((Poly::zero() * p).is_zero());
  CHECK(Poly::U(1) * Poly::U(2) == Poly::from(Monomial::U(1) * Monomial::U(2)));
  CHECK(poly_add(p, p).is_zero());
  CHECK(poly_mul(p, Poly::one()) == p);
}

TEST_CASE("polynomial text form") {
  CHECK(Poly::zero().str() == "0");
  CHECK(Poly::one().str() == "1");
  CHECK(Monomial::U(1, 3).str() == "U1^3");
  CHECK((Monomial::U(1) * Monomial::U(2, 2)).str() == "U1*U2^2");
}

TEST_CASE("linear combinations") {
  Lin<int> x(1), y(2);
  CHECK(lc_combine(x, x, Poly::one()).is_zero());
  CHECK(lc_combine(Lin<int>::zero(), y, Poly::U(1)) == y.scaled(Poly::U(1)));
  CHECK(lc_combine(x, y, Poly::one()) == x + y);
  // deterministic iteration: sorted by key
  Lin<int> z = y + x;
  CHECK(z.terms.begin()->first == 1);
}

TEST_CASE("F2 rank") {
  F2Matrix id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.set(i, i);
  CHECK(f2_rank(id3) == 3);
  CHECK(f2_rank(F2Matrix(4, 5)) == 0);
  F2Matrix ones(2, 2);
  ones.set(0, 0);
  ones.set(0, 1);
  ones.set(1, 0);
  ones.set(1, 1);
  CHECK(f2_rank(ones) == 1);
}

TEST_CASE("chain complex homology") {
  // single zero map on a 1-dimensional space
  F2Matrix z(0, 1);
  CHECK(complex_homology_dims({z}) == std::vector<std::size_t>{1});

  // two generators 1, s with d(s) = 1: acyclic
  F2Matrix d0(0, 1);
  F2Matrix d1(1, 1);
  d1.set(0, 0);
  CHECK(complex_homology_dims({d0, d1}) == std::vector<std::size_t>{0, 0});

  // non-complex rejected
  F2Matrix a(1, 1), b(1, 1);
  a.set(0, 0);
  b.set(0, 0);
  CHECK_THROWS_AS(complex_homology_dims({a, b}), std::runtime_error);
}
