#include "avgorder/rational.hpp"

#include <cctype>
#include <vector>

namespace avgorder {

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+'))
    ++i;
  if (i == text.size())
    throw ArithmeticError("malformed integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ArithmeticError("malformed integer: '" + std::string(text) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw ArithmeticError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  // Enough binary precision that the printed digits are exact up to rounding.
  mpf_class f(value_, 64 + static_cast<mp_bitcnt_t>(significant_digits) * 4);
  std::vector<char> buf(64 + static_cast<std::size_t>(significant_digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return buf.data();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0)
    throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace avgorder
