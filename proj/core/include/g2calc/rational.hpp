#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace g2calc {

// Exact rational number.  The value is always kept canonical (reduced
// fraction, positive denominator), so operator== is value equality and
// str() output is unique per value.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts an optional leading '-', an integer, and an optional '/den'.
  static Rational from_string(const std::string& text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_integer() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  // Exact n-th root if one exists in Q; odd n accepts negative input.
  std::optional<Rational> exact_nth_root(unsigned n) const;

  std::string str() const;
  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace g2calc
