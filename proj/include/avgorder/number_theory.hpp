#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "avgorder/rational.hpp"

namespace avgorder {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Sorted divisors of n (n >= 1).
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Returns the prime p if n = p^k for some k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
BigInt big_pow(std::uint64_t base, unsigned long exp);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of k modulo m; 0 when gcd(k, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m);

/// Smallest k in [2, m) whose multiplicative order mod m is exactly r.
std::optional<std::uint64_t> unit_of_order(std::uint64_t m, std::uint64_t r);

}  // namespace avgorder
