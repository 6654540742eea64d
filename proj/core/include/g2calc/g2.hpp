#pragma once

#include <optional>
#include <vector>

#include "g2calc/algebra.hpp"

namespace g2calc {

// A G2-structure on a seven-dimensional model: the defining 3-form, the
// metric and orientation it induces on the degree-1 expansion coframe, and
// the dual 4-form psi = star(phi).  The structure owns its metric: distinct
// 3-forms over one differential model may induce distinct metrics.
class GTwoStructure {
 public:
  // Derives metric, volume and psi from phi alone via the contraction
  // bilinear form.  Requires parameter-free coefficients.
  static GTwoStructure from_phi(const ExtAlgebra& alg, Form phi);

  // Parametric path: takes the metric as a claim (stated over the pure
  // expansion coframe) and verifies 6 g_ij vol = (X_i . phi)^(X_j . phi)^phi
  // before accepting it.
  static GTwoStructure with_metric(const ExtAlgebra& alg, Form phi, FrameMetric metric);

  const ExtAlgebra& algebra() const { return *alg_; }
  const Form& phi() const { return phi_; }
  const Form& psi() const { return psi_; }
  const FrameMetric& metric() const { return metric_; }
  Form volume() const;

  // Hodge star with respect to this structure's metric and orientation.
  Form star(const Form& a) const;
  // Metric pairing, read off from a ^ star(b) = <a,b> vol.
  Scalar inner(const Form& a, const Form& b) const;

 private:
  GTwoStructure(const ExtAlgebra& alg, Form phi, FrameMetric metric);

  const ExtAlgebra* alg_;
  Form phi_;
  FrameMetric metric_;
  Form psi_;
};

// The intrinsic torsion forms, defined through
//   tau0 = (1/7) star(dphi ^ phi),          tau1 = (1/12) star(phi ^ star(dphi)),
//   tau2 = -star(dpsi - 4 tau1 ^ psi),      tau3 = star(dphi - tau0 psi - 3 tau1 ^ phi).
struct TorsionData {
  Scalar tau0;
  Form tau1;
  Form tau2;
  Form tau3;
  // Torsion 3-form; present exactly when tau2 = 0.
  std::optional<Form> T;
  // The constant (7/12) tau0; exposed for reporting only.
  Scalar lambda;
};

// Computes the torsion forms and verifies, before returning, the
// reconstruction identities
//   dphi = tau0 psi + 3 tau1 ^ phi + star(tau3),
//   dpsi = 4 tau1 ^ psi + tau2 ^ phi,
// and the memberships tau2 ^ psi = 0, tau3 ^ phi = 0, tau3 ^ psi = 0.
TorsionData torsion_forms(const GTwoStructure& s);

// Torsion 3-form of a structure with tau2 = 0, computed as
//   (1/6) star(dphi ^ phi) phi - star(dphi) + 4 star(tau1 ^ phi)
// and cross-checked against (1/6) tau0 phi + star(tau1 ^ phi) - tau3.
// Errors when tau2 != 0 or when the two expressions disagree.
Form torsion_threeform(const GTwoStructure& s);

struct TwoFormParts {
  Form part7;   // (1/3)(alpha + star(alpha ^ phi))
  Form part14;  // (1/3)(2 alpha - star(alpha ^ phi))
};

// Splits a 2-form into its components in the 7- and 14-dimensional
// irreducible pieces.
TwoFormParts project_two_form(const Form& alpha, const GTwoStructure& s);

struct InstantonFailure {
  std::size_t index;
  Form residual;
};

// Checks F ^ psi = 0 for every component; returns the first failure, or
// nullopt when all components pass.
std::optional<InstantonFailure> g2_instanton_check(const std::vector<Form>& components,
                                                   const GTwoStructure& s);

}  // namespace g2calc
