#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2calc/difftable.hpp"
#include "g2calc/form.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/gauge.hpp"
#include "g2calc/metric.hpp"

namespace g2calc {

// An SU(3)-structure on a six-dimensional frame: a non-degenerate 2-form
// omega, a pair of 3-forms (the real and imaginary parts of the complex
// volume form), the metric they induce, and the almost-complex structure
// acting on 1-forms as J e^i = sum_j J[i][j] e^j.  The data must satisfy
//
//   omega ^ upsilon_plus = omega ^ upsilon_minus = 0,
//   upsilon_plus ^ upsilon_minus = (2/3) omega^3,
//   omega^3 = 6 vol,   J^2 = -Id,   omega_ab = sum_c J[c][a] g_cb,
//   J upsilon_plus = upsilon_minus  (J extended multiplicatively),
//
// which su3_validate checks literally.
struct SUThreeStructure {
  Form omega;
  Form upsilon_plus;
  Form upsilon_minus;
  FrameMetric metric;
  std::vector<std::vector<Scalar>> J;
};

struct SuValidation {
  bool ok = true;
  std::string reason;  // first failing condition when !ok
};

// The matrix of the almost-complex structure determined by a 2-form and a
// metric, in the convention omega_ab = sum_c J[c][a] g_cb.  Requires an
// invertible metric; does not check J^2 = -Id (validation does).
std::vector<std::vector<Scalar>> complex_structure_from_omega(const Form& omega,
                                                              const FrameMetric& metric);

// Builds the structure (deriving J from omega and the metric) and
// validates it; throws on any failing condition.
SUThreeStructure make_su3_structure(Form omega, Form upsilon_plus, Form upsilon_minus,
                                    FrameMetric metric);

SuValidation su3_validate(const SUThreeStructure& s);

// Multiplicative extension of J to arbitrary forms: each monomial maps to
// the wedge of the J-images of its generators.
Form apply_complex_structure(const SUThreeStructure& s, const Form& a);

// The omega-component of a 2-form: beta = c * omega + (terms killed by
// ^omega^2), c = star(beta ^ omega^2) / 6.
Scalar omega_component(const SUThreeStructure& s, const Form& beta);

// Intrinsic torsion of the structure with respect to a differential
// table, organised by representation type:
//
//   d omega   = -(3/2) sigma0 Up + (3/2) pi0 Um + nu1 ^ omega + nu3,
//   d Up      = pi0 omega^2 + pi1 ^ Up - pi2 ^ omega,
//   d Um      = sigma0 omega^2 + pi1 ^ Um - sigma2 ^ omega,
//
// with J pi2 = pi2, J sigma2 = sigma2, pi2 ^ omega^2 = sigma2 ^ omega^2 = 0,
// nu3 ^ omega = nu3 ^ Up = nu3 ^ Um = 0.  All components are found by one
// joint exact linear solve; the defining equations are re-verified on the
// result.  T_omega is the skew torsion of the canonical connection,
// present exactly when it exists (pi2 = sigma2 = 0 and pi1 = 2 nu1).
struct SUTorsion {
  Scalar pi0;
  Scalar sigma0;
  Form pi1;
  Form nu1;
  Form pi2;
  Form sigma2;
  Form nu3;
  std::optional<Form> T_omega;
};

SUTorsion su3_torsion(const SUThreeStructure& s, const DiffTable& table);

// The skew torsion 3-form computed from the torsion components,
//
//   T_omega = (pi0/2) Up + (sigma0/2) Um + (J nu1) ^ omega + J nu3,
//
// cross-checked against J(d omega) + 2 pi0 Up + 2 sigma0 Um with d omega
// reconstructed from the components.  Errors unless pi2 = sigma2 = 0 and
// pi1 = 2 nu1.
Form bismut_torsion(const SUThreeStructure& s, const SUTorsion& tor);

// Checks F ^ omega^2 = 0 and F ^ upsilon_plus = 0 for every component;
// returns the first failure, or nullopt when all pass.
std::optional<InstantonFailure> su3_instanton_check(const std::vector<Form>& components,
                                                    const SUThreeStructure& s);

// d T_omega - <F ^ F>.
Form su3_bianchi_residual(const Form& T_omega, const GaugeField& gf, const DiffTable& table);

}  // namespace g2calc
