#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2calc/param.hpp"
#include "g2calc/rational.hpp"

namespace g2calc {

// Element of Q[parameters] modulo the built-in relations: each sign
// parameter squares to 1 and each circle pair satisfies cos^2 + sin^2 = 1.
//
// Terms are kept in a canonical normal form: sign exponents are 0 or 1 and
// cosine exponents are 0 or 1 (cos^2 is rewritten to 1 - sin^2; the cosine
// precedes its sine in the parameter order, so the rewrite strictly
// decreases monomials lexicographically and normalisation terminates).
// Equal canonical forms are equal ring elements and vice versa, so
// operator== decides equality in the quotient ring.
struct ScalarAffine;

class Scalar {
 public:
  using Exponents = std::vector<std::int32_t>;
  using Affine = ScalarAffine;

  Scalar() : ps_(ParamSet::none()) {}
  Scalar(int n) : Scalar(Rational(n)) {}
  Scalar(const Rational& c);

  static Scalar zero(std::shared_ptr<const ParamSet> ps);
  static Scalar constant(std::shared_ptr<const ParamSet> ps, const Rational& c);
  static Scalar param(const std::shared_ptr<const ParamSet>& ps, const std::string& name);

  const std::shared_ptr<const ParamSet>& param_set() const { return ps_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // The value as a rational if no parameter occurs, otherwise nullopt.
  std::optional<Rational> as_constant() const;
  bool uses(const std::string& name) const;
  bool uses_any_param() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar scaled(const Rational& c) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Re-expresses this scalar over a parameter set of which the current one
  // is a prefix.
  Scalar lifted_to(std::shared_ptr<const ParamSet> target) const;

  // The inverse of lifted_to: re-expresses this scalar over a prefix of the
  // current parameter set.  Fails if any term uses a parameter beyond the
  // target.
  Scalar restricted_to(std::shared_ptr<const ParamSet> target) const;

  // Exact division.  Uses greedy lexicographic leading-term division; a
  // nullopt means the division did not succeed this way (which can happen
  // for ring-divisible pairs involving circle relations), not a proof of
  // non-divisibility.  Callers must treat nullopt as "unavailable".
  std::optional<Scalar> divided_by(const Scalar& divisor) const;

  // Substitutes rational values for parameters.  Sign parameters must get
  // +1 or -1; circle parameters must be substituted as a full pair with
  // cos^2 + sin^2 = 1.
  Scalar substituted(const std::map<std::string, Rational>& values) const;
  // Substitutes every parameter and returns the resulting number.
  Rational eval(const std::map<std::string, Rational>& values) const;

  // Splits the scalar as sum(linear[u] * u) + constant over the given
  // unknowns; errors if any term has total degree > 1 in them.
  Affine affine_in(const std::set<std::string>& unknowns) const;

  std::string str() const;

 private:
  Scalar(std::shared_ptr<const ParamSet> ps, std::map<Exponents, Rational> terms)
      : ps_(std::move(ps)), terms_(std::move(terms)) {}

  static void accumulate(std::map<Exponents, Rational>& acc, const ParamSet& ps, Exponents e,
                         Rational c);
  static std::pair<Scalar, Scalar> reconciled(const Scalar& a, const Scalar& b);

  std::shared_ptr<const ParamSet> ps_;
  std::map<Exponents, Rational> terms_;
};

// Decomposition of a scalar that is affine in a chosen set of unknowns.
struct ScalarAffine {
  std::map<std::string, Scalar> linear;
  Scalar constant;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace g2calc
