#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "avgorder/census.hpp"
#include "avgorder/perm.hpp"

using namespace avgorder;

namespace {

Permutation cyc(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

Permutation random_perm(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("permutations validate their image sequence") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), GroupError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), GroupError);
  CHECK_THROWS_AS(cyc(3, {{0, 3}}), GroupError);
  CHECK(cyc(4, {{2, 0}}).str() == "(0,2)");
  CHECK(Permutation(5).str() == "()");
}

TEST_CASE("compose applies the left argument first") {
  const Permutation p = cyc(3, {{0, 1}});
  const Permutation q = cyc(3, {{1, 2}});
  const Permutation pq = compose(p, q);
  // i -> q(p(i)): 0 -> q(1) = 2, 1 -> q(0) = 0, 2 -> q(2) = 1.
  CHECK(pq[0] == 2);
  CHECK(pq[1] == 0);
  CHECK(pq[2] == 1);
  CHECK(pq == cyc(3, {{0, 2, 1}}));
  CHECK(compose(Permutation(3), p) == p);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation(4)), GroupError);
}

TEST_CASE("perm_order is the lcm of cycle lengths") {
  CHECK(perm_order(Permutation(6)) == 1);
  CHECK(perm_order(cyc(7, {{0, 1, 2, 3, 4}, {5, 6}})) == 10);
  std::vector<Point> times2(7);
  for (Point x = 0; x < 7; ++x)
    times2[x] = (2 * x) % 7;
  CHECK(perm_order(Permutation(times2)) == 3);
  CHECK(power(Permutation(times2), 3).is_identity());
}

TEST_CASE("generate by closure") {
  CHECK(FiniteGroup(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})}).order() == 6);
  CHECK(FiniteGroup(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}).order() == 6);
  const FiniteGroup a5(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
  CHECK(a5.order() == 60);
  CHECK(FiniteGroup::trivial().order() == 1);
  CHECK_THROWS_AS(FiniteGroup(3, {}), GroupError);
  CHECK_THROWS_AS(FiniteGroup(3, {Permutation(4)}), GroupError);
}

TEST_CASE("size cap is a reported error") {
  const FiniteGroup s5(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK_THROWS_AS(generate(s5, 100), SizeCapExceeded);
  CHECK(generate(s5, 120).size() == 120);
}

TEST_CASE("direct products") {
  const FiniteGroup c2(2, {cyc(2, {{0, 1}})});
  const FiniteGroup c3(3, {cyc(3, {{0, 1, 2}})});
  const FiniteGroup c6 = direct_product(c2, c3);
  CHECK(c6.order() == 6);
  CHECK(order_census(c6).count(6) == 2);

  const FiniteGroup a5(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
  CHECK(direct_product(c2, a5).order() == 120);
  CHECK(order_census(direct_product(FiniteGroup::trivial(), a5)) == order_census(a5));
}

TEST_CASE("semidirect_cyclic") {
  const FiniteGroup f21 = semidirect_cyclic(7, 3, 2);
  CHECK(f21.order() == 21);
  CHECK(order_census(f21) == OrderCensus({{1, 1}, {3, 14}, {7, 6}}, 21));
  CHECK(psi(order_census(f21)) == 85);
  CHECK(semidirect_cyclic(43, 3, 6).order() == 129);  // 6^3 = 216 = 5*43 + 1
  CHECK_THROWS_AS(semidirect_cyclic(7, 3, 1), GroupError);
  CHECK_THROWS_AS(semidirect_cyclic(7, 3, 3), GroupError);  // 3^3 = 27 = 6 mod 7
  CHECK_THROWS_AS(semidirect_cyclic(8, 2, 3), GroupError);
  CHECK_THROWS_AS(semidirect_cyclic(7, 1, 2), GroupError);
}

TEST_CASE("closure invariants on random groups") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t degree = 3 + rng() % 4;
    const std::size_t ngens = 1 + rng() % 2;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < ngens; ++i)
      gens.push_back(random_perm(degree, rng));
    const FiniteGroup g(degree, gens);
    const auto& els = g.elements();

    CHECK(std::is_sorted(els.begin(), els.end()));
    CHECK(g.contains(Permutation(degree)));
    for (const auto& x : gens)
      CHECK(g.contains(x));
    for (const auto& x : els) {
      CHECK(g.contains(inverse(x)));
      CHECK(g.order() % perm_order(x) == 0);
    }
    for (int k = 0; k < 30; ++k) {
      const auto& a = els[rng() % els.size()];
      const auto& b = els[rng() % els.size()];
      CHECK(g.contains(compose(a, b)));
      CHECK(compose(compose(a, b), a) == compose(a, compose(b, a)));
    }
    CHECK(generate(g) == els);
    CHECK(FiniteGroup(degree, els).elements() == els);
  }
}
