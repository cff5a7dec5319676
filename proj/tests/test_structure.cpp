#include <doctest.h>

#include <random>
#include <string>

#include "avgorder/catalog.hpp"
#include "avgorder/structure.hpp"

using namespace avgorder;

namespace {

FiniteGroup group(const std::string& text) { return realize(parse_recipe(text)); }

}  // namespace

TEST_CASE("elementary abelian 2-groups and cyclicity from the census") {
  CHECK(is_elementary_abelian_2(order_census(group("E(2,4)"))));
  CHECK(is_elementary_abelian_2(order_census(group("C(1)"))));
  CHECK_FALSE(is_elementary_abelian_2(order_census(group("C(4)"))));
  CHECK_FALSE(is_elementary_abelian_2(order_census(group("S(3)"))));
  CHECK(is_cyclic(order_census(group("C(3) x C(4)"))));
  CHECK_FALSE(is_cyclic(order_census(group("C(2) x C(4)"))));
}

TEST_CASE("commutativity") {
  CHECK(is_abelian(group("C(2) x C(6)")));
  CHECK_FALSE(is_abelian(group("D(8)")));
  CHECK_FALSE(is_abelian(group("Dic(8)")));
}

TEST_CASE("derived subgroups and series") {
  CHECK(derived_subgroup(group("S(3)")).order() == 3);
  CHECK(derived_subgroup(group("S(4)")).order() == 12);
  CHECK(derived_subgroup(group("A(4)")).order() == 4);
  CHECK(derived_subgroup(group("A(5)")).order() == 60);
  CHECK(derived_subgroup(group("Dic(8)")).order() == 2);
  CHECK(derived_series(group("S(4)")).size() == 4);  // S4 > A4 > V4 > 1
  CHECK(lower_central_series(group("D(8)")).size() == 3);
}

TEST_CASE("solvability and nilpotency") {
  CHECK(is_solvable(group("S(4)")));
  CHECK(is_solvable(group("SD(7,3)")));
  CHECK_FALSE(is_solvable(group("A(5)")));
  CHECK_FALSE(is_solvable(group("C(2) x A(5)")));
  CHECK_FALSE(is_solvable(group("S(5)")));
  CHECK(is_nilpotent(group("D(8)")));
  CHECK(is_nilpotent(group("Dic(8) x C(3)")));
  CHECK_FALSE(is_nilpotent(group("S(3)")));
  CHECK_FALSE(is_nilpotent(group("A(4)")));
}

TEST_CASE("center and squares") {
  CHECK(center(group("S(3)")).order() == 1);
  CHECK(center(group("D(8)")).order() == 2);
  CHECK(center(group("C(2) x A(5)")).order() == 2);
  CHECK(center(group("C(6)")).order() == 6);
  CHECK(squares_count(group("C(4) x C(4)")) == 4);
  CHECK(squares_count(group("C(2) x Dic(8)")) == 2);
  CHECK(squares_count(group("E(2,3)")) == 1);
}

TEST_CASE("C2^m x A5 recognition") {
  CHECK(is_c2_power_times_a5(group("A(5)")));
  CHECK(is_c2_power_times_a5(group("C(2) x A(5)")));
  CHECK(is_c2_power_times_a5(group("E(2,2) x A(5)")));
  CHECK_FALSE(is_c2_power_times_a5(group("S(5)")));
  CHECK_FALSE(is_c2_power_times_a5(group("C(3) x A(5)")));
  CHECK_FALSE(is_c2_power_times_a5(group("C(4) x A(5)")));
  CHECK_FALSE(is_c2_power_times_a5(group("S(3)")));
}

TEST_CASE("n2 criteria") {
  const N2Verdict e = n2_criteria_check(group("E(2,4)"));
  CHECK(e.n2 == 15);
  CHECK(e.hypothesis_a);
  CHECK(e.elementary_abelian_2);
  CHECK(e.consistent());

  const N2Verdict s3 = n2_criteria_check(group("S(3)"));
  CHECK(s3.n2 == 3);
  CHECK_FALSE(s3.hypothesis_a);
  CHECK(s3.hypothesis_b);
  CHECK(s3.solvable);

  const N2Verdict c2a5 = n2_criteria_check(group("C(2) x A(5)"));
  CHECK(c2a5.n2 == 31);
  CHECK(c2a5.hypothesis_b);  // 31 > 120/4 - 1
  CHECK_FALSE(c2a5.solvable);
  CHECK(c2a5.c2_power_times_a5);
  CHECK(c2a5.consistent());

  const N2Verdict s5 = n2_criteria_check(group("S(5)"));
  CHECK(s5.n2 == 25);
  CHECK_FALSE(s5.hypothesis_b);
}

TEST_CASE("normal closures are normal subgroups") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> parents = {"S(4)", "D(12)", "Dic(12)", "A(4)", "SD(7,3)",
                                            "C(2) x S(3)", "S(3) x S(3)"};
  for (const auto& text : parents) {
    const FiniteGroup g = group(text);
    const auto& els = g.elements();
    for (int trial = 0; trial < 5; ++trial) {
      const Permutation x = els[rng() % els.size()];
      const FiniteGroup n = normal_closure(g, {x});
      CAPTURE(text);
      CHECK(g.order() % n.order() == 0);
      CHECK(n.contains(x));
      for (const auto& h : n.elements())
        for (const auto& s : g.generators())
          CHECK(n.contains(conjugate(h, s)));
    }
    const auto series = derived_series(g);
    for (std::size_t i = 1; i < series.size(); ++i)
      CHECK(series[i - 1].order() % series[i].order() == 0);
  }
}
