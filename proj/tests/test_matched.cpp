#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cornered/matched.hpp"

using namespace cornered;

static MatchedInterval torus_interval() {
  return {Matching::from_pairs(4, {{1, 3}, {2, 4}})};
}

TEST_CASE("surgery component counts") {
  // a nested pair on an interval pinches off a closed circle
  Matching m0 = Matching::from_pairs(2, {{1, 2}});
  CHECK(surgery_components(m0, false) == 2);
  CHECK(!MatchedInterval{m0}.valid());
  // circle with nested matching {1,2},{3,4} falls apart into three circles
  Matching nested = Matching::from_pairs(4, {{1, 2}, {3, 4}});
  CHECK(surgery_components(nested, true) == 3);
  CHECK(!PointedMatchedCircle{nested, 2}.valid());
  // interleaved matching {1,3},{2,4} is the genus-one circle
  Matching torus = Matching::from_pairs(4, {{1, 3}, {2, 4}});
  CHECK(surgery_components(torus, true) == 1);
  CHECK(PointedMatchedCircle{torus, 2}.valid());
  CHECK(torus_interval().valid());
}

TEST_CASE("gluing two intervals") {
  PointedMatchedCircle z = glue_intervals(torus_interval(), torus_interval());
  CHECK(z.m.points == 8);
  CHECK(z.split == 4);
  CHECK(z.m.pair_list() ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {5, 7}, {6, 8}});
  CHECK(z.valid());  // genus-two circle
}

TEST_CASE("json round trip") {
  PointedMatchedCircle z = circle_from_json(
      R"({"points": 4, "matching": [[1,3],[2,4]], "split": 2})");
  CHECK(z.m == Matching::from_pairs(4, {{1, 3}, {2, 4}}));
  CHECK(z.split == 2);
  PointedMatchedCircle again = circle_from_json(to_json(z.m, z.split));
  CHECK(again.m == z.m);
  CHECK(again.split == z.split);
  MatchedInterval iv = interval_from_json(R"({"points": 4, "matching": [[1,3],[2,4]]})");
  CHECK(iv.m == z.m);
  CHECK_THROWS_AS(interval_from_json(R"({"points": 3, "matching": [[1,3]]})"),
                  std::invalid_argument);
}

TEST_CASE("sections") {
  Matching torus = Matching::from_pairs(4, {{1, 3}, {2, 4}});
  CHECK(sections(torus, {}) == std::vector<std::vector<int>>{{}});
  CHECK(sections(torus, {1}) == std::vector<std::vector<int>>{{1}, {3}});
  CHECK(sections(torus, {1, 2}).size() == 4);
  // I(s) sums the idempotents of all sections
  AElt i1 = I_of(torus, {1});
  CHECK(i1.terms.size() == 2);
  CHECK(strands_mul(i1, i1) == i1);
}

TEST_CASE("matching algebra of the genus-one circle") {
  PointedMatchedCircle z{Matching::from_pairs(4, {{1, 3}, {2, 4}}), 2};
  auto basis = matching_algebra_basis(z);
  // direct membership on a witness inside and outside
  AElt in = matched_element(z.m, basis.front());
  CHECK(is_matched_element(z.m, in));
  // a lone idempotent is not swap invariant: its partner summand is missing
  CHECK(!is_matched_element(z.m, AElt(idempotent_gen(4, {1}))));
  Report rep = matching_algebra_check(z);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("matching algebra of a genus-two circle") {
  PointedMatchedCircle z = glue_intervals(torus_interval(), torus_interval());
  Report rep = matching_algebra_check(z);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("interval algebra-modules over the torus interval") {
  Report rep = interval_module_check(torus_interval());
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("grading group of the circle and refinement data") {
  Matching torus = Matching::from_pairs(4, {{1, 3}, {2, 4}});
  // the class of a full chord 1 -> 3 pairs off around the matching
  GradingElement g = gr_prime(chord(4, 1, 3).terms.begin()->first);
  CHECK(g_of_z_membership(torus, g) ==
        (delta_at(g.alpha, 1) + delta_at(g.alpha, 3) == 0 &&
         delta_at(g.alpha, 2) + delta_at(g.alpha, 4) == 0 && g_dprime_member(g)));
  RefinementData psi = refinement_data(torus);
  CHECK(psi.size() == 4);  // one element per label subset
  for (auto& [s, ge] : psi) CHECK(g_dprime_member(ge));
  // the base subsets themselves get boundary zero
  CHECK(psi.at({}).alpha.is_zero());
  Report rep = refinement_check({torus, 2}, psi);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("glued circle decomposes through the interval modules") {
  Report rep = theorem_azed_check(torus_interval(), torus_interval());
  INFO(rep.summary());
  CHECK(rep.ok());
}
