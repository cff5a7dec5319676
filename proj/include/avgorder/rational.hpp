#pragma once

// Exact arithmetic for every psi value, average order, bound and threshold.
// Integers are arbitrary precision; rationals are always kept reduced with a
// positive denominator, so structural equality is value equality.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace avgorder {

using BigInt = mpz_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "num/den" or a bare integer; throws ArithmeticError on bad input.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", always with an explicit denominator.
  std::string str() const;
  /// Decimal rendering for human-facing output only.
  std::string decimal(int significant_digits = 12) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

/// Canonical fraction num/den; throws ArithmeticError when den == 0.
Rational rat(const BigInt& num, const BigInt& den);
inline Rational rat(long num, long den) { return rat(BigInt(num), BigInt(den)); }

Rational abs(const Rational& r);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

std::string to_string(const BigInt& n);

}  // namespace avgorder
