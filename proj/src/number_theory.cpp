#include "avgorder/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace avgorder {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1)
    out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n))
    phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2)
    return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
      composite[j] = true;
  }
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1)
    return std::nullopt;
  return f.front().prime;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

BigInt big_pow(std::uint64_t base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1)
    return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1)
      result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m) {
  if (m == 0 || std::gcd(k % m, m) != 1)
    return 0;
  if (m == 1)
    return 1;
  std::uint64_t x = k % m;
  std::uint64_t ord = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * k % m);
    ++ord;
  }
  return ord;
}

std::optional<std::uint64_t> unit_of_order(std::uint64_t m, std::uint64_t r) {
  for (std::uint64_t k = 2; k < m; ++k)
    if (multiplicative_order(k, m) == r)
      return k;
  return std::nullopt;
}

}  // namespace avgorder
