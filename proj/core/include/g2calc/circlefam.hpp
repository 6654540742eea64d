#pragma once

#include <memory>
#include <string>

#include "g2calc/algebra.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/gauge.hpp"
#include "g2calc/linsolve.hpp"
#include "g2calc/su3.hpp"

namespace g2calc {

// A circle of definite 3-forms over a six-dimensional model.  The total
// space carries one extra coframe generator eta with a prescribed
// differential d eta that lives on the base; the family
//
//   phi_t = eta ^ omega + c Up - s Um,
//   psi_t = (1/2) omega^2 - eta ^ (s Up + c Um),
//
// is parametrised by a (c, s) circle pair of the ring, and every member
// induces the product metric eta (x) eta + g.
struct CircleScenario {
  std::shared_ptr<const PureAlgebra> base;   // six-dimensional model carrying the SU(3) data
  std::shared_ptr<const PureAlgebra> total;  // extension by eta, with the product metric
  SUThreeStructure su3;                      // structure over base->coframe()
  std::string eta;                           // name of the extra generator
  Form deta;                                 // d eta, written on the total coframe
  Form deta_base;                            // the same 2-form on the base coframe
  Scalar c;                                  // cosine parameter of the family
  Scalar s;                                  // sine parameter of the family
};

// Assembles and validates a scenario.  Checks: the structure passes
// su3_validate; the total coframe consists of the base generators plus
// eta; the total table restricts to the base table and satisfies d^2 = 0;
// d eta has degree 2 and no eta leg; ps contains the named (cos, sin)
// pair and extends every parameter set used by the inputs.  The product
// metric on the total coframe is built here, with the orientation
// vol = eta ^ vol_base.
CircleScenario make_circle_scenario(const std::shared_ptr<const ParamSet>& ps,
                                    const DiffTable& base_table, SUThreeStructure su3,
                                    const DiffTable& total_table, const std::string& eta,
                                    const std::string& cos_name, const std::string& sin_name);

// Rewrites a form on the base coframe as a form on the total coframe.
Form lifted_to_total(const CircleScenario& cs, const Form& on_base);

// The member of the family at the scenario's (c, s), as a definite
// 3-form with the supplied product metric (verified through the defining
// identity 6 g_ij vol = (X_i . phi) ^ (X_j . phi) ^ phi).  Also verifies,
// before returning, that the induced dual 4-form equals
// (1/2) omega^2 - eta ^ (s Up + c Um), and that the Hodge star obeys the
// product rule star(a) = star6(a) ^ eta, star(a ^ eta) = (-1)^k star6(a)
// on every basis monomial a of the base.
GTwoStructure build_phi_t(const CircleScenario& cs);

// Conditions under which the whole family has skew torsion: the sigma2
// and pi2 components of the base torsion vanish, pi1 = 2 nu1, and d eta
// is invariant under the almost-complex structure.  The trace records
// the omega-component of d eta; when it also vanishes, the torsion is
// the same 3-form for every member of the family.
struct IntegrabilityReport {
  bool sigma2_zero = false;
  bool pi2_zero = false;
  bool pi1_eq_2nu1 = false;
  bool deta_j_invariant = false;
  bool deta_traceless = false;
  Scalar deta_trace;
  SUTorsion torsion;  // base torsion, kept for reuse

  bool integrable() const { return sigma2_zero && pi2_zero && pi1_eq_2nu1 && deta_j_invariant; }
};

IntegrabilityReport integrability_test(const CircleScenario& cs);

// The 5-form  2 (d eta)_6 ^ (s Up + c Um) - 2 nu1 ^ omega^2 + pi1 ^ omega^2
// on the base, where (d eta)_6 is the J-anti-invariant half of d eta.
// It vanishes identically in (c, s) exactly when d eta is J-invariant
// and pi1 = 2 nu1; a nonzero value obstructs skew torsion somewhere on
// the circle.
Form integrability_obstruction(const CircleScenario& cs);

// The torsion of the family, computed from the generic torsion pipeline
// on the total space and verified against the closed expression
//
//   T = eta ^ (d eta - 2 tr omega) + T_base + tr (c Up - s Um),
//
// with tr the omega-component of d eta.  tau0 and tau1 are additionally
// checked against (12/7)(c pi0 - s sigma0) + (6/7) tr and
// (1/2)(c sigma0 - s pi0) eta + (1/2) nu1, and against the independent
// extractions (6/7) <T, phi> and -(1/4) star(T ^ phi).  Errors unless
// the scenario passes the first four integrability flags.
struct TorsionFamily {
  GTwoStructure structure;  // the member at the scenario's (c, s)
  Form T;                   // skew torsion on the total coframe
  Scalar tau0;
  Form tau1;
  bool t_independent = false;  // T is one 3-form for the whole circle
};

TorsionFamily torsion_family(const CircleScenario& cs);

// Result of lifting instanton data across the circle: whether every
// curvature component (including d eta) annihilates the dual 4-form for
// all (c, s), the solve for the pairing coefficient of the eta block in
//
//   d T = u (d eta ^ d eta) + <F ^ F>,
//
// and the residual of that identity at the solved coefficient.  When
// d eta ^ d eta = 0 the coefficient is unconstrained and reported free.
struct LiftReport {
  bool instanton = false;
  SolveResult scale;
  Form residual;
  bool bianchi_closed = false;

  bool ok() const { return instanton && bianchi_closed; }
};

// Preconditions (each failure is a named error): the integrability flags
// hold, d eta is trace-free, the field is an instanton on the base, and
// the base anomaly identity d T_base = <F ^ F> holds.  The overload
// without a field lifts the eta block alone.
LiftReport lift_solution(const CircleScenario& cs, const GaugeField& gf);
LiftReport lift_solution(const CircleScenario& cs);

// Ready-made scenarios.  The product of two three-spheres in the split
// frame f(2i-1) = (e_i - e_{i+3})/2, f(2i) = (e_i + e_{i+3})/2, with
// d eta = f13 + f24; the rank-two nilpotent model with eta the flat
// first direction; and the diagonal torus family with
// d eta = a e12 + b e34 + c e56 on the flat six-torus.  The first two
// own a fresh (ct, st) ring; the torus builders take coefficients over
// a ring that already carries the named pair.
CircleScenario s3s3_circle_scenario();
CircleScenario n32_circle_scenario();
CircleScenario heisenberg_circle_scenario(const Scalar& a, const Scalar& b, const Scalar& c,
                                          const std::string& cos_name,
                                          const std::string& sin_name);
// Fully symbolic coefficients (a, b, c) over a fresh ring, and the
// trace-free slice c = -a - b.
CircleScenario heisenberg_circle_scenario();
CircleScenario heisenberg_traceless_scenario();

// Diagnostics of the diagonal torus family: the three 2-forms
// s1 = e12 - e34, s2 = e34 - e56, s3 = e15 + e26 annihilate the dual
// 4-form for all (c, s); d T is the fixed quadratic combination
//
//   (1/3) [ (a^2+b^2-ab+ac+bc) s1^2 + (b^2+c^2+ab+ac-bc) s2^2
//           + (a^2+c^2+ab-ac+bc) s3^2 ];
//
// and the diagonal pairing solved from d T = sum_i u_i s_i^2 satisfies
// 3 u = ((a-b)^2 + d, (b-c)^2 + d, (a-c)^2 + d) with d = ab + bc + ca.
struct HeisenbergReport {
  bool seeds_instanton = false;
  Form dT;
  bool display_matches = false;
  SolveResult pairing;
  bool family_matches = false;

  bool ok() const {
    return seeds_instanton && display_matches && pairing.solved() && family_matches;
  }
};

// Requires a scenario shaped like the torus family: flat base, the
// standard structure in the base generator order, and a diagonal d eta.
HeisenbergReport heisenberg_family(const CircleScenario& cs);

}  // namespace g2calc
