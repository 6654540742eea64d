#include "g2calc/rational.hpp"

#include <cctype>
#include <ostream>

#include "g2calc/error.hpp"

namespace g2calc {

Rational::Rational(long num, long den) {
  if (den == 0) fail("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) fail("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  // Validate strictly before handing to GMP (which is laxer about bases
  // and whitespace than our expression grammar allows).
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) fail("invalid rational literal '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') fail("invalid rational literal '" + text + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) fail("invalid rational literal '" + text + "'");
  }
  mpq_class v(text);
  if (sgn(v.get_den()) == 0) fail("rational literal '" + text + "' has zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) fail("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned exponent) const {
  mpq_class result(1);
  mpq_class base = value_;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return Rational(std::move(result));
}

std::optional<Rational> Rational::exact_nth_root(unsigned n) const {
  if (n == 0) fail("zeroth root");
  if (is_zero()) return Rational(0);
  const bool negative = is_negative();
  if (negative && n % 2 == 0) return std::nullopt;
  mpz_class num = ::abs(value_.get_num());
  mpz_class den = value_.get_den();
  mpz_class num_root, den_root;
  const bool num_exact = mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), n) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  mpq_class root(num_root, den_root);
  root.canonicalize();
  if (negative) root = -root;
  return Rational(std::move(root));
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace g2calc
