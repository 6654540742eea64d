#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "g2calc/algebra.hpp"
#include "g2calc/catalog.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/gauge.hpp"
#include "g2calc/linsolve.hpp"

namespace g2calc {

// A two-step coframe scenario on e1..e7: the structure equations
//   d e^{4+i} = sum_j a_plus[i][j] sigma_plus(j) + a_minus[i][j] sigma_minus(j),
// an SO(3) frame rotation b acting on (e5,e6,e7), a bracket matrix c for the
// three-dimensional gauge algebra carried by the fibre directions, and a
// symmetric pairing used to square the gauge curvature.
struct NilScenario {
  std::vector<std::vector<Scalar>> a_plus;
  std::vector<std::vector<Scalar>> a_minus;
  std::vector<std::vector<Scalar>> b;
  std::vector<std::vector<Scalar>> c;
  std::vector<std::vector<Scalar>> pairing;
};

// The pure coframe e1..e7.
std::shared_ptr<const Coframe> nil_coframe();

// Validates the scenario shapes and checks b^T b = Id and det b = 1 in the
// coefficient ring; errors otherwise.
NilScenario make_nil_scenario(std::vector<std::vector<Scalar>> a_plus,
                              std::vector<std::vector<Scalar>> a_minus,
                              std::vector<std::vector<Scalar>> b,
                              std::vector<std::vector<Scalar>> c,
                              std::vector<std::vector<Scalar>> pairing);

// Diagonal special case a_plus = delta Id, a_minus = diag(eps).
NilScenario standard_nil_scenario(const Scalar& delta, const std::array<Scalar, 3>& eps,
                                  std::vector<std::vector<Scalar>> b,
                                  std::vector<std::vector<Scalar>> c,
                                  std::vector<std::vector<Scalar>> pairing);

// The bracket matrix forced by the instanton condition: -2 a_plus b.
std::vector<std::vector<Scalar>> instanton_c(const NilScenario& sc);

// Exact rotation from an integer quaternion (w, x, y, z), not all zero:
// the classical rational parametrization of SO(3).  Entries are returned as
// constants of the given ring.
std::vector<std::vector<Scalar>> rotation_from_quaternion(const std::shared_ptr<const ParamSet>& ps,
                                                          long long w, long long x, long long y,
                                                          long long z);

// The structure with its differential model.  The structure references the
// algebra, so both are returned together and the algebra is held by pointer.
struct NilBuild {
  std::shared_ptr<const PureAlgebra> algebra;
  GTwoStructure structure;
};

// Builds the definite 3-form
//   phi = sigma_plus(1)^E5 + sigma_plus(2)^E6 + sigma_plus(3)^E7 + E5^E6^E7,
// E^{4+i} = sum_j b[i][j] e^{4+j}, over the scenario's differential model.
// When the coefficients are constant the metric is derived from phi and
// checked to be the identity; otherwise the identity metric is taken as a
// claim and verified against the contraction bilinear form.  In both cases
// the computed dual 4-form is checked against
//   e1234 + sigma_plus(1)^E67 + sigma_plus(2)^E75 + sigma_plus(3)^E56,
// with (E67, E75, E56) = b (e67, e75, e56).
NilBuild build_phi(const NilScenario& sc);

// Both readings of the instanton condition for the connection with
// curvature components F^{4+k} = d e^{4+k} + sum_l c[k][l] (e^2)_l,
// (e^2) = (e67, e75, e56): the matrix identity c = -2 a_plus b and the
// direct wedge test F ^ psi = 0.
struct InstantonVerdict {
  bool matrix_condition = false;
  bool wedge_condition = false;

  bool consistent() const { return matrix_condition == wedge_condition; }
};

InstantonVerdict instanton_equivalence(const NilScenario& sc);

// d psi for the scenario's structure, with the instanton verdict alongside:
// when the wedge condition holds, coclosed is expected to hold as well.
struct CoclosedReport {
  bool instanton = false;
  bool coclosed = false;
  Form dpsi;
};

CoclosedReport coclosed_consequence(const NilScenario& sc);

// The three-generator gauge field on the fibre directions: generators
// Y5, Y6, Y7 with brackets read off the diagonal bracket matrix c, the
// scenario pairing, and connection forms e5, e6, e7 of the given coframe.
// Requires c diagonal.
GaugeField nil_gauge_field(const NilScenario& sc, const std::shared_ptr<const Coframe>& cf,
                           const DiffTable& table);

// d T - <F ^ F> for the scenario: T is the torsion 3-form of the structure
// (which has vanishing tau2 on this ansatz), and F the gauge field above.
// Requires c diagonal.
Form bianchi_catalog(const NilScenario& sc);

// Solves for a general symmetric pairing p making d T = <F ^ F> hold
// identically in the free parameters of the structure matrices: the
// dependence is quadratic, so the identity is imposed on exact samples
// (unit and pairwise-unit parameter values) and the union of the resulting
// linear systems is solved for the six entries p11, p12, p13, p22, p23,
// p33.  Requires c diagonal and only free parameters in the scenario.
SolveResult solve_general_pairing(const NilScenario& sc);

enum class PairingSignature { PositiveDefinite, Mixed21, Mixed12, NegativeDefinite };

struct PairingSolution {
  bool possible = false;
  std::array<Rational, 3> diag{};
  std::string note;
};

// For the abelian case (a_plus = 0): a diagonal pairing diag(p1, p2, p3)
// with the requested signature solving sum_i p_i eps_i^2 = sum_i eps_i^2,
// the condition for d T = <F ^ F> with F^{4+i} = eps_i sigma_minus(i).
// The eps entries must be constants.  A negative-definite pairing is
// impossible whenever some eps_i != 0 (the left side would be <= 0 while
// the right side is positive); with all eps zero any pairing works and the
// solution says so.  Returned solutions are verified by substitution.
PairingSolution solve_abelian_pairing(const std::array<Scalar, 3>& eps, PairingSignature sig);

// The gauge extension restoring d T = <F ^ F> on the branch
// b = diag(1,-1,-1), c = -2 a_plus b with a_plus = delta Id and a_minus
// diagonal, pairing (1/3) diag(-1,1,1): the coframe gains a generator xi
// with d xi = sigma_minus(1), and the field is the product of a central
// generator Y0 with connection xi, paired with itself by
//   |Y0|^2 = (2/3)(4 delta^2 + 2 eps1^2 + eps2^2 + eps3^2),
// and the three fibre generators.  The returned residual d T - <F ^ F> is
// computed on the extended frame and vanishes identically.
struct SlSupplement {
  std::shared_ptr<const Coframe> coframe;
  DiffTable table;
  GaugeField field;
  Scalar y0_norm;
  Form residual;
};

SlSupplement sl2_supplement(const NilScenario& sc);

}  // namespace g2calc
