#pragma once

#include <memory>
#include <vector>

#include "g2calc/form.hpp"

namespace g2calc {

// Metric data on a pure coframe: the Gram matrix g_ij of the frame vectors
// dual to the coframe, together with the volume coefficient v of the
// volume form v * e_{1...n}.  The constructor checks v^2 = det(g) as a
// ring identity (v may be negative: the structure then orients the frame
// oppositely to the generator order).
class FrameMetric {
 public:
  FrameMetric(std::shared_ptr<const Coframe> cf, std::vector<std::vector<Scalar>> gram,
              Scalar volume_coefficient);

  static FrameMetric identity(std::shared_ptr<const Coframe> cf);
  static FrameMetric diagonal(std::shared_ptr<const Coframe> cf, std::vector<Scalar> diag,
                              Scalar volume_coefficient);

  const std::shared_ptr<const Coframe>& coframe() const { return cf_; }
  std::size_t size() const { return cf_->size(); }
  const Scalar& entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  // Entry of the inverse Gram matrix (= inner products of coframe legs).
  const Scalar& inverse_entry(std::size_t i, std::size_t j) const { return inverse_[i][j]; }
  const Scalar& volume_coefficient() const { return volume_coefficient_; }
  Form volume() const;
  bool is_identity() const { return identity_; }

  // Hodge star, characterised by beta ^ star(alpha) = <beta, alpha> vol.
  Form hodge(const Form& a) const;

  // Pointwise inner product of two forms (termwise over matching degrees).
  Scalar inner(const Form& a, const Form& b) const;

  // Checks positivity through leading principal minors; requires a
  // parameter-free Gram matrix.
  bool positive_definite() const;

 private:
  std::shared_ptr<const Coframe> cf_;
  std::vector<std::vector<Scalar>> gram_;
  std::vector<std::vector<Scalar>> inverse_;
  Scalar volume_coefficient_;
  bool identity_ = false;
  bool diagonal_ = false;
};

// Determinant by cofactor expansion (matrices here are at most 8x8).
Scalar matrix_determinant(const std::vector<std::vector<Scalar>>& m);

struct DerivedMetric {
  FrameMetric metric;
  Form volume;
  // Entries b_ij of the contraction bilinear form, kept for reporting.
  std::vector<std::vector<Rational>> contraction_matrix;
};

// Derives the metric and volume determined by a 3-form on a pure
// 7-dimensional coframe through the contraction bilinear form
// b_ij = (X_i . phi) ^ (X_j . phi) ^ phi = 6 v g_ij, det(b) = 6^7 v^9.
// Requires parameter-free coefficients (the ninth root must be taken in
// Q); parametric structures go through verify_metric_of_phi instead.
DerivedMetric metric_from_phi(const Form& phi);

// For a parametric 3-form with a supplied candidate metric: checks
// b_ij = 6 v g_ij identically; throws with the failing entry otherwise.
void verify_metric_of_phi(const Form& phi, const FrameMetric& metric);

}  // namespace g2calc
