#include "g2calc/metric.hpp"

#include <algorithm>

#include "g2calc/error.hpp"

namespace g2calc {

namespace {

std::vector<std::vector<Scalar>> minor_matrix(const std::vector<std::vector<Scalar>>& m,
                                              std::size_t drop_row, std::size_t drop_col) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> out;
  out.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop_row) continue;
    std::vector<Scalar> row;
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == drop_col) continue;
      row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

int concatenation_sign(const Form::Monomial& k, const Form::Monomial& kc) {
  long inversions = 0;
  for (const auto a : k)
    for (const auto b : kc)
      if (a > b) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void enumerate_subsets(std::size_t n, std::size_t k, std::vector<Form::Monomial>& out) {
  Form::Monomial current;
  current.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
      current.push_back(static_cast<std::int32_t>(i));
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

Scalar matrix_determinant(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(Rational(1));
  for (const auto& row : m)
    if (row.size() != n) fail("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Scalar det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    const Scalar cofactor = matrix_determinant(minor_matrix(m, 0, j));
    const Scalar piece = m[0][j] * cofactor;
    if (j % 2 == 0)
      det += piece;
    else
      det -= piece;
  }
  return det;
}

FrameMetric::FrameMetric(std::shared_ptr<const Coframe> cf,
                         std::vector<std::vector<Scalar>> gram, Scalar volume_coefficient)
    : cf_(std::move(cf)), gram_(std::move(gram)), volume_coefficient_(std::move(volume_coefficient)) {
  if (!cf_->is_pure()) fail("metric requires a pure coframe");
  const std::size_t n = cf_->size();
  if (gram_.size() != n) fail("metric matrix size mismatch");
  for (const auto& row : gram_)
    if (row.size() != n) fail("metric matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) fail("metric matrix is not symmetric");

  const Scalar det = matrix_determinant(gram_);
  if (det.is_zero()) fail("metric matrix is singular");
  if (volume_coefficient_ * volume_coefficient_ != det)
    fail("volume coefficient squared does not equal det(g)");

  // Inverse through the adjugate; entries must divide exactly.
  inverse_.assign(n, std::vector<Scalar>(n, Scalar()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar cof = matrix_determinant(minor_matrix(gram_, j, i));
      if ((i + j) % 2 != 0) cof = -cof;
      const auto q = cof.divided_by(det);
      if (!q) fail("cannot invert metric symbolically (adjugate entry is not divisible)");
      inverse_[i][j] = *q;
    }
  }

  diagonal_ = true;
  identity_ = true;
  const Scalar one(Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !gram_[i][j].is_zero()) diagonal_ = false;
      if ((i == j && gram_[i][j] != one) || (i != j && !gram_[i][j].is_zero())) identity_ = false;
    }
  }
  if (identity_ && volume_coefficient_ != one) identity_ = false;
}

FrameMetric FrameMetric::identity(std::shared_ptr<const Coframe> cf) {
  const std::size_t n = cf->size();
  std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n, Scalar()));
  for (std::size_t i = 0; i < n; ++i) gram[i][i] = Scalar(Rational(1));
  return FrameMetric(std::move(cf), std::move(gram), Scalar(Rational(1)));
}

FrameMetric FrameMetric::diagonal(std::shared_ptr<const Coframe> cf, std::vector<Scalar> diag,
                                  Scalar volume_coefficient) {
  const std::size_t n = cf->size();
  if (diag.size() != n) fail("diagonal metric size mismatch");
  std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n, Scalar()));
  for (std::size_t i = 0; i < n; ++i) gram[i][i] = std::move(diag[i]);
  return FrameMetric(std::move(cf), std::move(gram), std::move(volume_coefficient));
}

Form FrameMetric::volume() const {
  Form vol(cf_);
  Form::Monomial top(cf_->size());
  for (std::size_t i = 0; i < cf_->size(); ++i) top[i] = static_cast<std::int32_t>(i);
  vol.add_term(std::move(top), volume_coefficient_);
  return vol;
}

Form FrameMetric::hodge(const Form& a) const {
  if (!a.coframe()->same_as(*cf_)) fail("hodge: form lives on another coframe");
  const std::size_t n = cf_->size();
  Form out(a.coframe());
  std::map<std::size_t, std::vector<Form::Monomial>> subsets_by_degree;
  for (const auto& [mono, coeff] : a.terms()) {
    const std::size_t k = mono.size();
    Form::Monomial complement;
    complement.reserve(n - k);

    if (identity_ || diagonal_) {
      // Only K = I contributes.
      for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(mono.begin(), mono.end(), static_cast<std::int32_t>(i)))
          complement.push_back(static_cast<std::int32_t>(i));
      Scalar factor = volume_coefficient_;
      for (const auto idx : mono) {
        const std::size_t i = static_cast<std::size_t>(idx);
        factor *= inverse_[i][i];
      }
      const int sign = concatenation_sign(mono, complement);
      out.add_term(std::move(complement), sign == 1 ? factor * coeff : -(factor * coeff));
      continue;
    }

    auto& subsets = subsets_by_degree[k];
    if (subsets.empty()) enumerate_subsets(n, k, subsets);
    for (const auto& K : subsets) {
      // <e_K, e_I> = det of the inverse-Gram submatrix.
      std::vector<std::vector<Scalar>> sub(k, std::vector<Scalar>(k, Scalar()));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          sub[r][c] = inverse_[static_cast<std::size_t>(K[r])][static_cast<std::size_t>(mono[c])];
      const Scalar pairing = matrix_determinant(sub);
      if (pairing.is_zero()) continue;
      complement.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(K.begin(), K.end(), static_cast<std::int32_t>(i)))
          complement.push_back(static_cast<std::int32_t>(i));
      const int sign = concatenation_sign(K, complement);
      const Scalar piece = pairing * volume_coefficient_ * coeff;
      out.add_term(complement, sign == 1 ? piece : -piece);
    }
  }
  return out;
}

Scalar FrameMetric::inner(const Form& a, const Form& b) const {
  if (!a.coframe()->same_as(*cf_) || !b.coframe()->same_as(*cf_))
    fail("inner: form lives on another coframe");
  Scalar total;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.size() != mb.size()) continue;
      const std::size_t k = ma.size();
      std::vector<std::vector<Scalar>> sub(k, std::vector<Scalar>(k, Scalar()));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          sub[r][c] = inverse_[static_cast<std::size_t>(ma[r])][static_cast<std::size_t>(mb[c])];
      total += matrix_determinant(sub) * ca * cb;
    }
  }
  return total;
}

bool FrameMetric::positive_definite() const {
  const std::size_t n = cf_->size();
  std::vector<std::vector<Scalar>> leading;
  for (std::size_t k = 1; k <= n; ++k) {
    leading.assign(k, std::vector<Scalar>(k, Scalar()));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) leading[i][j] = gram_[i][j];
    const auto minor = matrix_determinant(leading).as_constant();
    if (!minor) fail("positive-definiteness test requires a parameter-free metric");
    if (minor->is_negative() || minor->is_zero()) return false;
  }
  return true;
}

DerivedMetric metric_from_phi(const Form& phi) {
  const auto& cf = phi.coframe();
  if (!cf->is_pure() || cf->size() != 7) fail("metric derivation requires a pure 7-dim coframe");
  const auto degree = phi.homogeneous_degree();
  if (!degree || *degree != 3) fail("metric derivation requires a homogeneous 3-form");

  Form::Monomial top(7);
  for (std::size_t i = 0; i < 7; ++i) top[i] = static_cast<std::int32_t>(i);

  std::vector<Form> contractions;
  contractions.reserve(7);
  for (std::size_t i = 0; i < 7; ++i) contractions.push_back(phi.contracted(cf->name(i)));

  std::vector<std::vector<Rational>> b(7, std::vector<Rational>(7, Rational(0)));
  std::vector<std::vector<Scalar>> b_scalar(7, std::vector<Scalar>(7, Scalar()));
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i; j < 7; ++j) {
      const Form w = Form::wedge_pure(Form::wedge_pure(contractions[i], contractions[j]), phi);
      const Scalar entry = w.coefficient_at(top);
      b_scalar[i][j] = entry;
      b_scalar[j][i] = entry;
      const auto c = entry.as_constant();
      if (!c)
        fail("contraction matrix entry b(" + cf->name(i) + "," + cf->name(j) +
             ") is parametric; supply the metric explicitly");
      b[i][j] = *c;
      b[j][i] = *c;
    }
  }

  const auto det = matrix_determinant(b_scalar).as_constant();
  const Rational v9 = *det / Rational(6).pow(7);
  const auto v = v9.exact_nth_root(9);
  if (!v) fail("det(b)/6^7 = " + v9.str() + " has no rational ninth root");
  if (v->is_zero()) fail("3-form is degenerate (zero volume)");

  std::vector<std::vector<Scalar>> gram(7, std::vector<Scalar>(7, Scalar()));
  const Rational scale = (Rational(6) * *v).inverse();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) gram[i][j] = Scalar(b[i][j] * scale);

  FrameMetric metric(cf, std::move(gram), Scalar(*v));
  Form volume = metric.volume();
  return DerivedMetric{std::move(metric), std::move(volume), std::move(b)};
}

void verify_metric_of_phi(const Form& phi, const FrameMetric& metric) {
  const auto& cf = phi.coframe();
  if (!cf->same_as(*metric.coframe())) fail("metric verification: coframe mismatch");
  if (!cf->is_pure() || cf->size() != 7) fail("metric verification requires a pure 7-dim coframe");
  Form::Monomial top(7);
  for (std::size_t i = 0; i < 7; ++i) top[i] = static_cast<std::int32_t>(i);
  std::vector<Form> contractions;
  for (std::size_t i = 0; i < 7; ++i) contractions.push_back(phi.contracted(cf->name(i)));
  const Scalar six(Rational(6));
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i; j < 7; ++j) {
      const Form w = Form::wedge_pure(Form::wedge_pure(contractions[i], contractions[j]), phi);
      const Scalar lhs = w.coefficient_at(top);
      const Scalar rhs = six * metric.volume_coefficient() * metric.entry(i, j);
      if (lhs != rhs)
        fail("supplied metric does not match the 3-form: b(" + cf->name(i) + "," + cf->name(j) +
             ") = " + lhs.str() + " but 6*v*g = " + rhs.str());
    }
  }
}

}  // namespace g2calc
