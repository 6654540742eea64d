#include "g2calc/form.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "g2calc/error.hpp"

namespace g2calc {

Coframe::Coframe(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) fail("coframe name/degree count mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) fail("empty generator name");
    if (index_.count(names_[i])) fail("duplicate generator name '" + names_[i] + "'");
    if (degrees_[i] < 1) fail("generator '" + names_[i] + "' has degree < 1");
    index_[names_[i]] = static_cast<int>(i);
    if (degrees_[i] != 1) pure_ = false;
  }
}

std::shared_ptr<const Coframe> Coframe::pure(std::vector<std::string> names) {
  if (names.size() > 8) fail("pure coframe dimension exceeds 8");
  std::vector<int> degrees(names.size(), 1);
  return std::shared_ptr<const Coframe>(new Coframe(std::move(names), std::move(degrees)));
}

std::shared_ptr<const Coframe> Coframe::graded(std::vector<std::string> names,
                                               std::vector<int> degrees) {
  return std::shared_ptr<const Coframe>(new Coframe(std::move(names), std::move(degrees)));
}

int Coframe::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool Coframe::same_as(const Coframe& other) const {
  if (this == &other) return true;
  return names_ == other.names_ && degrees_ == other.degrees_;
}

namespace {

void require_same_coframe(const Form& a, const Form& b) {
  if (a.coframe() == b.coframe()) return;
  if (!a.coframe()->same_as(*b.coframe())) fail("forms over different coframes");
}

// Merges two strictly increasing index lists; nullopt on a shared index.
// The sign is the parity of the interleaving (all generators degree 1).
std::optional<std::pair<Form::Monomial, int>> merge_monomials(const Form::Monomial& a,
                                                              const Form::Monomial& b) {
  Form::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
      inversions += static_cast<long>(a.size() - i);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

}  // namespace

Form Form::from_scalar(std::shared_ptr<const Coframe> cf, Scalar c) {
  Form f(std::move(cf));
  f.add_term({}, std::move(c));
  return f;
}

Form Form::generator(const std::shared_ptr<const Coframe>& cf, const std::string& name) {
  const int idx = cf->index_of(name);
  if (idx < 0) fail("unknown generator '" + name + "'");
  Form f(cf);
  f.add_term({idx}, Scalar(Rational(1)));
  return f;
}

Form Form::term(const std::shared_ptr<const Coframe>& cf, const std::vector<std::string>& names,
                Scalar coeff) {
  Monomial m;
  m.reserve(names.size());
  for (const auto& n : names) {
    const int idx = cf->index_of(n);
    if (idx < 0) fail("unknown generator '" + n + "'");
    m.push_back(idx);
  }
  // Insertion sort, tracking the graded permutation sign: transposing
  // adjacent generators of degrees p and q contributes (-1)^{pq}.
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j] <= m[j - 1]; --j) {
      if (m[j] == m[j - 1]) {
        const int deg = cf->degree(static_cast<std::size_t>(m[j]));
        if (deg % 2 == 0)
          fail("repeated even-degree generator '" + cf->name(static_cast<std::size_t>(m[j])) +
               "' has no monomial normal form");
        return Form(cf);
      }
      const int p = cf->degree(static_cast<std::size_t>(m[j]));
      const int q = cf->degree(static_cast<std::size_t>(m[j - 1]));
      if ((p * q) % 2 != 0) sign = -sign;
      std::swap(m[j], m[j - 1]);
    }
  }
  Form f(cf);
  f.add_term(std::move(m), sign == 1 ? std::move(coeff) : -coeff);
  return f;
}

int Form::monomial_degree(const Monomial& m) const {
  int degree = 0;
  for (const auto idx : m) degree += cf_->degree(static_cast<std::size_t>(idx));
  return degree;
}

std::optional<int> Form::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [m, c] : terms_) {
    const int d = monomial_degree(m);
    if (!degree) {
      degree = d;
    } else if (*degree != d) {
      return std::nullopt;
    }
  }
  return degree;
}

Form Form::operator-() const {
  Form out(cf_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Form& Form::operator+=(const Form& o) {
  require_same_coframe(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  require_same_coframe(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

bool operator==(const Form& a, const Form& b) {
  require_same_coframe(a, b);
  Form diff = a;
  diff -= b;
  return diff.is_zero();
}

Form Form::scaled(const Scalar& c) const {
  Form out(cf_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

Form Form::wedge_pure(const Form& a, const Form& b) {
  require_same_coframe(a, b);
  if (!a.coframe()->is_pure()) fail("wedge_pure requires a pure coframe");
  Form out(a.coframe());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto merged = merge_monomials(ma, mb);
      if (!merged) continue;
      Scalar c = ca * cb;
      out.add_term(std::move(merged->first), merged->second == 1 ? std::move(c) : -c);
    }
  }
  return out;
}

Form Form::contracted(const std::string& direction) const {
  if (!cf_->is_pure()) fail("contraction requires a pure coframe");
  const int v = cf_->index_of(direction);
  if (v < 0) fail("unknown generator '" + direction + "'");
  Form out(cf_);
  for (const auto& [m, c] : terms_) {
    auto it = std::find(m.begin(), m.end(), v);
    if (it == m.end()) continue;
    const std::size_t pos = static_cast<std::size_t>(it - m.begin());
    Monomial reduced;
    reduced.reserve(m.size() - 1);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != pos) reduced.push_back(m[i]);
    out.add_term(std::move(reduced), pos % 2 == 0 ? c : -c);
  }
  return out;
}

Scalar Form::coefficient_at(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Form::coefficient(const std::vector<std::string>& names) const {
  const Form probe = term(cf_, names, Scalar(Rational(1)));
  if (probe.is_zero()) fail("coefficient of a degenerate monomial");
  const auto& [m, sign] = *probe.terms_.begin();
  const Scalar c = coefficient_at(m);
  return sign * c;
}

Scalar Form::as_scalar() const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    if (!m.empty()) fail("form has terms of positive degree: '" + str() + "'");
    out = c;
  }
  return out;
}

void Form::add_term(Monomial m, Scalar c) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] >= m[i + 1]) fail("form monomial indices must be strictly increasing");
  for (const auto idx : m)
    if (idx < 0 || static_cast<std::size_t>(idx) >= cf_->size())
      fail("form monomial index out of range");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::substituted(const std::map<std::string, Rational>& values) const {
  // Coefficients may sit over nested parameter sets; validate the
  // substitution names against the widest one.
  auto widest = ParamSet::none();
  for (const auto& [m, c] : terms_) {
    (void)m;
    const auto& ps = c.param_set();
    if (widest->is_prefix_of(*ps))
      widest = ps;
    else if (!ps->is_prefix_of(*widest))
      fail("form coefficients over incompatible parameter sets");
  }
  Form out(cf_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.lifted_to(widest).substituted(values));
  return out;
}

Form Form::mapped_generators(const Form& a, const std::map<std::string, Form>& images,
                             const std::shared_ptr<const Coframe>& target) {
  if (!a.coframe()->is_pure() || !target->is_pure())
    fail("mapped_generators requires pure coframes");
  Form out = Form::zero(target);
  for (const auto& [m, c] : a.terms()) {
    Form acc = Form::from_scalar(target, c);
    for (std::int32_t idx : m) {
      const std::string& name = a.coframe()->name(static_cast<std::size_t>(idx));
      auto it = images.find(name);
      if (it == images.end()) fail("mapped_generators: no image for generator '" + name + "'");
      if (!it->second.coframe()->same_as(*target))
        fail("mapped_generators: image of '" + name + "' lives on a different coframe");
      acc = Form::wedge_pure(acc, it->second);
    }
    out += acc;
  }
  return out;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto idx : m) {
      if (!mono.empty()) mono += "^";
      mono += cf_->name(static_cast<std::size_t>(idx));
    }
    std::string piece;
    if (mono.empty()) {
      piece = c.str();
    } else if (c.terms().size() == 1) {
      const auto& [e, coeff] = *c.terms().begin();
      bool has_params = false;
      for (const auto exp : e)
        if (exp > 0) has_params = true;
      if (!has_params && coeff.is_one()) {
        piece = mono;
      } else if (!has_params && (-coeff).is_one()) {
        piece = "-" + mono;
      } else {
        piece = c.str() + "*" + mono;
      }
    } else {
      piece = "(" + c.str() + ")*" + mono;
    }
    if (first) {
      os << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.str(); }

}  // namespace g2calc
