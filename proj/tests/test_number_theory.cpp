#include <doctest.h>

#include <numeric>

#include "avgorder/number_theory.hpp"

using namespace avgorder;

TEST_CASE("factorization helpers") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(3887) == std::vector<PrimePower>{{13, 2}, {23, 1}});
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power_base(16) == 2u);
  CHECK(prime_power_base(27) == 3u);
  CHECK_FALSE(prime_power_base(12).has_value());
  CHECK_FALSE(prime_power_base(1).has_value());
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("euler phi against a gcd count") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
      count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("units of a given order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(2, 6) == 0);
  CHECK(unit_of_order(7, 3) == 2u);
  CHECK(unit_of_order(5, 4) == 2u);
  const auto k = unit_of_order(43, 3);
  REQUIRE(k.has_value());
  CHECK(pow_mod(*k, 3, 43) == 1);
  CHECK(*k % 43 != 1);
  CHECK_FALSE(unit_of_order(7, 4).has_value());
}
