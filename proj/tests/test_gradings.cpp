#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cornered/gradings.hpp"

using namespace cornered;

TEST_CASE("multiplicity classes and averages") {
  MultiplicityClass z = MultiplicityClass::zero(2);
  CHECK(mult_at_twice(z, 1) == 0);
  CHECK(mult_at_twice(z, 2) == 0);
  MultiplicityClass a = MultiplicityClass::interval(2, 1, 2);
  CHECK(mult_at_twice(a, 1) == 1);  // (0 + 1) / 2
  CHECK(mult_at_twice(a, 2) == 1);  // (1 + 0) / 2
  CHECK(delta_at(a, 1) == -1);
  CHECK(delta_at(a, 2) == 1);
}

TEST_CASE("group law and text form") {
  for (int N = 2; N <= 4; ++N) {
    Report r = grading_group_suite(N);
    INFO(r.summary());
    CHECK(r.ok());
  }
  GradingElement g{-1, MultiplicityClass::interval(2, 1, 2)};
  CHECK(g.str() == "(-1/2; 1)");
  GradingElement h{-1, MultiplicityClass::interval(3, 1, 2)};
  CHECK(h.str() == "(-1/2; 1,0)");
  CHECK(GradingElement::identity(3).str() == "(0; 0,0)");
  // identity and lambda behave
  GradingElement l = GradingElement::lambda(3);
  CHECK(g_mul(GradingElement::identity(3), h) == h);
  CHECK(g_pow(l, -1) == GradingElement{-2, MultiplicityClass::zero(3)});
}

TEST_CASE("gr' on basic elements") {
  // gr'(I_S) = (0, 0)
  CHECK(gr_prime(idempotent_gen(3, {1, 3})) == GradingElement::identity(3));
  // gr' of the chord generator at N=2: (-1/2, [1,2])
  StrandsTriple c;
  c.N = 2;
  c.ph = {{1, 2}};
  CHECK(gr_prime(c) == GradingElement{-1, MultiplicityClass::interval(2, 1, 2)});
  // pure strands elements have zero tau
  CHECK(tau_top(gr_prime(top_idempotent_gen(3, {2}))) == 0);
}

TEST_CASE("grading laws across the algebra and modules") {
  for (int N = 1; N <= 3; ++N) {
    Report r = grading_strands_suite(N);
    INFO(r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("amalgamation") {
  GradingElement l2 = GradingElement::lambda(2), l3 = GradingElement::lambda(3);
  CHECK(amalgamate(l2, GradingElement::identity(3)).twiceK ==
        amalgamate(GradingElement::identity(2), l3).twiceK);
  AmalgamatedElement e = amalgamate(GradingElement::identity(2), GradingElement::identity(3));
  CHECK(amalgam_mul(e, e) == e);
  // tau mismatch rejected in triple mode
  GradingElement t{0, MultiplicityClass::zero(2)};
  t.alpha.topExtra = 1;
  CHECK_THROWS_AS(amalgamate(t, GradingElement::identity(3), AmalgamationMode::Triple),
                  std::invalid_argument);
}

TEST_CASE("reconstruction respects amalgamated gradings") {
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    Report r = graded_bnt_check(n1, n2);
    INFO("N=" << n1 << " N'=" << n2 << "\n" << r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("bigrades") {
  // A(I_S) = 0, mu(I_S) = 0 for any marking lines
  std::vector<int> LX = {1}, LO = {2};
  CHECK(bigrade_algebra(idempotent_gen(3, {1, 2}), LX, LO) == Bigrade{0, 0});
  // additivity under products, exhaustively at N=3
  for (auto& a : strands_basis(3))
    for (auto& b : strands_basis(3))
      for (auto& [c, coef] : strands_mul(AElt(a), AElt(b)).terms)
        CHECK(bigrade_algebra(c, LX, LO) ==
              bigrade_algebra(a, LX, LO) + bigrade_algebra(b, LX, LO));
  // differential preserves A, drops mu by one
  for (auto& a : strands_basis(3))
    for (auto& [c, coef] : strands_diff(AElt(a)).terms) {
      Bigrade ga = bigrade_algebra(a, LX, LO), gc = bigrade_algebra(c, LX, LO);
      CHECK(gc.alexander == ga.alexander);
      CHECK(gc.maslov == ga.maslov - 1);
    }
}
