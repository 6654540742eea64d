#include "g2calc/scalar.hpp"

#include <ostream>
#include <sstream>

#include "g2calc/error.hpp"

namespace g2calc {

Scalar::Scalar(const Rational& c) : ps_(ParamSet::none()) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Scalar Scalar::zero(std::shared_ptr<const ParamSet> ps) { return Scalar(std::move(ps), {}); }

Scalar Scalar::constant(std::shared_ptr<const ParamSet> ps, const Rational& c) {
  std::map<Exponents, Rational> terms;
  if (!c.is_zero()) terms.emplace(Exponents(ps->size(), 0), c);
  return Scalar(std::move(ps), std::move(terms));
}

Scalar Scalar::param(const std::shared_ptr<const ParamSet>& ps, const std::string& name) {
  const int idx = ps->index_of(name);
  if (idx < 0) fail("unknown parameter '" + name + "'");
  Exponents e(ps->size(), 0);
  e[static_cast<std::size_t>(idx)] = 1;
  std::map<Exponents, Rational> terms;
  terms.emplace(std::move(e), Rational(1));
  return Scalar(ps, std::move(terms));
}

std::optional<Rational> Scalar::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (const auto exp : e)
    if (exp != 0) return std::nullopt;
  return c;
}

bool Scalar::uses(const std::string& name) const {
  const int idx = ps_->index_of(name);
  if (idx < 0) return false;
  for (const auto& [e, c] : terms_)
    if (e[static_cast<std::size_t>(idx)] > 0) return true;
  return false;
}

bool Scalar::uses_any_param() const {
  for (const auto& [e, c] : terms_)
    for (const auto exp : e)
      if (exp != 0) return true;
  return false;
}

void Scalar::accumulate(std::map<Exponents, Rational>& acc, const ParamSet& ps, Exponents e,
                        Rational c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) fail("negative parameter exponent");
    if (e[i] >= 2 && ps.at(i).kind == ParamKind::Sign) e[i] %= 2;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= 2 && ps.at(i).kind == ParamKind::Cos) {
      // cos^2 -> 1 - sin^2.  Both replacement monomials are smaller in the
      // lexicographic order because the cosine precedes its sine.
      Exponents reduced = e;
      reduced[i] -= 2;
      Exponents swapped = reduced;
      swapped[static_cast<std::size_t>(ps.at(i).partner)] += 2;
      accumulate(acc, ps, std::move(reduced), c);
      accumulate(acc, ps, std::move(swapped), -c);
      return;
    }
  }
  auto it = acc.find(e);
  if (it == acc.end()) {
    acc.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::pair<Scalar, Scalar> Scalar::reconciled(const Scalar& a, const Scalar& b) {
  if (a.ps_ == b.ps_ || a.ps_->same_as(*b.ps_)) return {a, b};
  if (a.ps_->is_prefix_of(*b.ps_)) return {a.lifted_to(b.ps_), b};
  if (b.ps_->is_prefix_of(*a.ps_)) return {a, b.lifted_to(a.ps_)};
  fail("scalars over incompatible parameter sets");
}

Scalar Scalar::operator-() const {
  std::map<Exponents, Rational> terms;
  for (const auto& [e, c] : terms_) terms.emplace(e, -c);
  return Scalar(ps_, std::move(terms));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto [x, y] = reconciled(*this, o);
  std::map<Exponents, Rational> acc = std::move(x.terms_);
  for (const auto& [e, c] : y.terms_) accumulate(acc, *x.ps_, e, c);
  ps_ = x.ps_;
  terms_ = std::move(acc);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  auto [x, y] = Scalar::reconciled(a, b);
  std::map<Scalar::Exponents, Rational> acc;
  for (const auto& [ea, ca] : x.terms()) {
    for (const auto& [eb, cb] : y.terms()) {
      Scalar::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar::accumulate(acc, *x.param_set(), std::move(e), ca * cb);
    }
  }
  return Scalar(x.param_set(), std::move(acc));
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ps_);
  std::map<Exponents, Rational> terms;
  for (const auto& [e, coeff] : terms_) terms.emplace(e, coeff * c);
  return Scalar(ps_, std::move(terms));
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto [x, y] = Scalar::reconciled(a, b);
  return x.terms() == y.terms();
}

Scalar Scalar::lifted_to(std::shared_ptr<const ParamSet> target) const {
  if (ps_ == target || ps_->same_as(*target)) return Scalar(std::move(target), terms_);
  if (!ps_->is_prefix_of(*target)) fail("parameter set is not a prefix of the lift target");
  std::map<Exponents, Rational> terms;
  for (const auto& [e, c] : terms_) {
    Exponents padded = e;
    padded.resize(target->size(), 0);
    terms.emplace(std::move(padded), c);
  }
  return Scalar(std::move(target), std::move(terms));
}

Scalar Scalar::restricted_to(std::shared_ptr<const ParamSet> target) const {
  if (ps_ == target || ps_->same_as(*target)) return Scalar(std::move(target), terms_);
  if (!target->is_prefix_of(*ps_)) fail("restriction target is not a prefix of the parameter set");
  const std::size_t n = target->size();
  std::map<Exponents, Rational> terms;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = n; i < e.size(); ++i)
      if (e[i] != 0)
        fail("scalar uses parameter '" + ps_->at(i).name + "' outside the restriction target");
    Exponents cut = e;
    cut.resize(n, 0);
    terms.emplace(std::move(cut), c);
  }
  return Scalar(std::move(target), std::move(terms));
}

std::optional<Scalar> Scalar::divided_by(const Scalar& divisor) const {
  auto [f0, g0] = reconciled(*this, divisor);
  if (g0.is_zero()) fail("scalar division by zero");

  auto greedy = [](const Scalar& f, const Scalar& g) -> std::optional<Scalar> {
    const auto& [eg, cg] = *g.terms_.rbegin();
    std::map<Exponents, Rational> quotient;
    Scalar r = f;
    while (!r.terms_.empty()) {
      const auto& [ef, cf] = *r.terms_.rbegin();
      Exponents em(ef.size());
      for (std::size_t i = 0; i < ef.size(); ++i) {
        if (ef[i] < eg[i]) return std::nullopt;
        em[i] = ef[i] - eg[i];
      }
      // The leading monomial of r strictly decreases every round (the product
      // of canonical monomials em + eg is canonical, so it survives
      // normalisation and cancels exactly), hence this loop terminates.
      const Rational cm = cf / cg;
      std::map<Exponents, Rational> mg;
      for (const auto& [e, c] : g.terms_) {
        Exponents prod(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + em[i];
        accumulate(mg, *f.ps_, std::move(prod), c * cm);
      }
      quotient.emplace(std::move(em), cm);
      r -= Scalar(f.ps_, std::move(mg));
    }
    return Scalar(f.ps_, std::move(quotient));
  };

  auto attempt = [&greedy](const Scalar& f, const Scalar& g) -> std::optional<Scalar> {
    if (auto c = g.as_constant()) return f.scaled(c->inverse());
    if (f.is_zero()) return zero(f.ps_);
    return greedy(f, g);
  };

  if (auto q = attempt(f0, g0)) return q;

  // Second chance: when the divisor involves circle parameters (and no sign
  // parameters, whose relation x^2 = 1 creates zero divisors), the ring is an
  // integral domain, so f/g = (f g)/(g g).  Squaring clears odd cosine
  // exponents via cos^2 = 1 - sin^2, which often unblocks the greedy scan.
  bool circle = false;
  bool sign = false;
  for (const auto& [e, c] : g0.terms_) {
    (void)c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const ParamKind kind = g0.ps_->at(i).kind;
      if (kind == ParamKind::Cos || kind == ParamKind::Sin) circle = true;
      if (kind == ParamKind::Sign) sign = true;
    }
  }
  if (!circle || sign) return std::nullopt;
  return attempt(f0 * g0, g0 * g0);
}

Scalar Scalar::substituted(const std::map<std::string, Rational>& values) const {
  if (values.empty()) return *this;
  std::vector<std::optional<Rational>> sub(ps_->size());
  for (const auto& [name, val] : values) {
    const int idx = ps_->index_of(name);
    if (idx < 0) fail("substitution for unknown parameter '" + name + "'");
    const Param& p = ps_->at(static_cast<std::size_t>(idx));
    if (p.kind == ParamKind::Sign && !(val == Rational(1) || val == Rational(-1)))
      fail("sign parameter '" + name + "' must be substituted by +1 or -1");
    sub[static_cast<std::size_t>(idx)] = val;
  }
  for (std::size_t i = 0; i < ps_->size(); ++i) {
    const Param& p = ps_->at(i);
    if (p.kind != ParamKind::Cos) continue;
    const std::size_t j = static_cast<std::size_t>(p.partner);
    if (sub[i].has_value() != sub[j].has_value())
      fail("circle pair ('" + p.name + "', '" + ps_->at(j).name +
           "') must be substituted together");
    if (sub[i]) {
      const Rational c = *sub[i];
      const Rational s = *sub[j];
      if (c * c + s * s != Rational(1))
        fail("circle pair ('" + p.name + "', '" + ps_->at(j).name +
             "') violates cos^2 + sin^2 = 1");
    }
  }
  std::map<Exponents, Rational> acc;
  for (const auto& [e, coeff] : terms_) {
    Rational c = coeff;
    Exponents reduced = e;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (reduced[i] > 0 && sub[i]) {
        c *= sub[i]->pow(static_cast<unsigned>(reduced[i]));
        reduced[i] = 0;
      }
    }
    accumulate(acc, *ps_, std::move(reduced), std::move(c));
  }
  return Scalar(ps_, std::move(acc));
}

Rational Scalar::eval(const std::map<std::string, Rational>& values) const {
  const Scalar s = substituted(values);
  if (auto c = s.as_constant()) return *c;
  fail("evaluation left parameters unbound in '" + s.str() + "'");
}

Scalar::Affine Scalar::affine_in(const std::set<std::string>& unknowns) const {
  std::vector<char> is_unknown(ps_->size(), 0);
  for (const auto& u : unknowns) {
    const int idx = ps_->index_of(u);
    if (idx < 0) fail("unknown '" + u + "' not in parameter set");
    is_unknown[static_cast<std::size_t>(idx)] = 1;
  }
  std::map<std::string, std::map<Exponents, Rational>> linear_acc;
  std::map<Exponents, Rational> constant_acc;
  for (const auto& [e, c] : terms_) {
    int degree = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (is_unknown[i] && e[i] > 0) {
        degree += e[i];
        where = i;
      }
    }
    if (degree == 0) {
      accumulate(constant_acc, *ps_, e, c);
    } else if (degree == 1) {
      Exponents stripped = e;
      stripped[where] = 0;
      accumulate(linear_acc[ps_->at(where).name], *ps_, std::move(stripped), c);
    } else {
      fail("expression is not affine in the unknowns: term '" + str() + "'");
    }
  }
  Affine out{{}, Scalar(ps_, std::move(constant_acc))};
  for (auto& [name, acc] : linear_acc) out.linear.emplace(name, Scalar(ps_, std::move(acc)));
  return out;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.is_negative();
    const Rational magnitude = negative ? -c : c;
    std::string body;
    bool has_params = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) has_params = true;
    if (!has_params || !magnitude.is_one()) body = magnitude.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::int32_t k = 0; k < e[i]; ++k) {
        if (!body.empty()) body += "*";
        body += ps_->at(i).name;
      }
    }
    if (first) {
      os << (negative ? "-" : "") << body;
      first = false;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace g2calc
