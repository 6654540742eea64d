#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g2calc/scalar.hpp"

namespace g2calc {

// Named generators of an exterior algebra.  Generators may have degree
// other than 1 (models that keep distinguished 2- and 4-forms as opaque
// symbols use this); a coframe whose generators all have degree 1 is
// called pure.
class Coframe {
 public:
  static std::shared_ptr<const Coframe> pure(std::vector<std::string> names);
  static std::shared_ptr<const Coframe> graded(std::vector<std::string> names,
                                               std::vector<int> degrees);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  int index_of(const std::string& name) const;
  bool is_pure() const { return pure_; }
  bool same_as(const Coframe& other) const;

 private:
  Coframe(std::vector<std::string> names, std::vector<int> degrees);

  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::map<std::string, int> index_;
  bool pure_ = true;
};

// Exterior form: a finite sum coefficient * monomial where each monomial
// is a strictly increasing list of generator indices.  Sums of mixed
// degree are allowed; all operations act termwise.
class Form {
 public:
  using Monomial = std::vector<std::int32_t>;

  explicit Form(std::shared_ptr<const Coframe> cf) : cf_(std::move(cf)) {}

  static Form zero(std::shared_ptr<const Coframe> cf) { return Form(std::move(cf)); }
  static Form from_scalar(std::shared_ptr<const Coframe> cf, Scalar c);
  static Form generator(const std::shared_ptr<const Coframe>& cf, const std::string& name);
  // Product of named generators; indices are sorted with the graded
  // permutation sign.  A repeated odd-degree generator gives zero; a
  // repeated even-degree generator is an error (such a product is not a
  // single monomial).
  static Form term(const std::shared_ptr<const Coframe>& cf,
                   const std::vector<std::string>& names, Scalar coeff);

  const std::shared_ptr<const Coframe>& coframe() const { return cf_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int monomial_degree(const Monomial& m) const;
  // Common degree of all terms; nullopt for the zero form or a mixed sum.
  std::optional<int> homogeneous_degree() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  Form scaled(const Scalar& c) const;
  Form scaled(const Rational& c) const { return scaled(Scalar(c)); }

  // Wedge product; both coframes must be pure and identical.
  static Form wedge_pure(const Form& a, const Form& b);

  // Interior product with the frame vector dual to a degree-1 generator.
  // The form must live on a pure coframe.
  Form contracted(const std::string& direction) const;

  Scalar coefficient_at(const Monomial& m) const;
  Scalar coefficient(const std::vector<std::string>& names) const;

  // The degree-0 part; errors if any higher-degree term is present.
  Scalar as_scalar() const;

  // Adds c * e_m; m must be strictly increasing.
  void add_term(Monomial m, Scalar c);

  Form substituted(const std::map<std::string, Rational>& values) const;

  std::string str() const;

  // Extends a generator assignment to an algebra map: each monomial maps
  // to the wedge of its generators' images (in monomial order), scaled by
  // the original coefficient.  Both coframes must be pure.  Every
  // generator occurring in the form needs an image; used for linear frame
  // changes and for embedding a form into a larger coframe.
  static Form mapped_generators(const Form& a, const std::map<std::string, Form>& images,
                                const std::shared_ptr<const Coframe>& target);

 private:
  std::shared_ptr<const Coframe> cf_;
  std::map<Monomial, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const Form& f);

}  // namespace g2calc
