#include "g2calc/g2.hpp"

#include <utility>

#include "g2calc/error.hpp"

namespace g2calc {

GTwoStructure::GTwoStructure(const ExtAlgebra& alg, Form phi, FrameMetric metric)
    : alg_(&alg), phi_(std::move(phi)), metric_(std::move(metric)), psi_(alg.zero()) {
  psi_ = star(phi_);
}

GTwoStructure GTwoStructure::from_phi(const ExtAlgebra& alg, Form phi) {
  DerivedMetric dm = metric_from_phi(alg.expanded(phi));
  return GTwoStructure(alg, std::move(phi), std::move(dm.metric));
}

GTwoStructure GTwoStructure::with_metric(const ExtAlgebra& alg, Form phi, FrameMetric metric) {
  verify_metric_of_phi(alg.expanded(phi), metric);
  return GTwoStructure(alg, std::move(phi), std::move(metric));
}

Form GTwoStructure::volume() const { return alg_->reassembled(metric_.volume()); }

Form GTwoStructure::star(const Form& a) const {
  return alg_->reassembled(metric_.hodge(alg_->expanded(a)));
}

Scalar GTwoStructure::inner(const Form& a, const Form& b) const {
  return star(alg_->wedge(a, star(b))).as_scalar();
}

TorsionData torsion_forms(const GTwoStructure& s) {
  const ExtAlgebra& alg = s.algebra();
  const Form& phi = s.phi();
  const Form& psi = s.psi();
  const Form dphi = alg.d(phi);
  const Form dpsi = alg.d(psi);

  const Scalar tau0 = s.star(alg.wedge(dphi, phi)).as_scalar().scaled(Rational(1, 7));
  const Form tau1 = s.star(alg.wedge(phi, s.star(dphi))).scaled(Rational(1, 12));
  const Form tau2 = -s.star(dpsi - alg.wedge(tau1, psi).scaled(Rational(4)));
  const Form tau3 =
      s.star(dphi - psi.scaled(tau0) - alg.wedge(tau1, phi).scaled(Rational(3)));
  TorsionData out{tau0, tau1, tau2, tau3, std::nullopt, tau0.scaled(Rational(7, 12))};

  const Form dphi_residual =
      dphi - psi.scaled(out.tau0) - alg.wedge(out.tau1, phi).scaled(Rational(3)) - s.star(out.tau3);
  if (!dphi_residual.is_zero()) fail("torsion reconstruction of d(phi) failed");
  const Form dpsi_residual =
      dpsi - alg.wedge(out.tau1, psi).scaled(Rational(4)) - alg.wedge(out.tau2, phi);
  if (!dpsi_residual.is_zero()) fail("torsion reconstruction of d(psi) failed");
  if (!alg.wedge(out.tau2, psi).is_zero()) fail("tau2 is not in the 14-dimensional class");
  if (!alg.wedge(out.tau3, phi).is_zero() || !alg.wedge(out.tau3, psi).is_zero())
    fail("tau3 is not in the 27-dimensional class");

  if (out.tau2.is_zero()) {
    out.T = phi.scaled(out.tau0.scaled(Rational(1, 6))) + s.star(alg.wedge(out.tau1, phi)) -
            out.tau3;
  }
  return out;
}

Form torsion_threeform(const GTwoStructure& s) {
  const ExtAlgebra& alg = s.algebra();
  const Form& phi = s.phi();
  const Form dphi = alg.d(phi);
  const TorsionData data = torsion_forms(s);
  if (!data.tau2.is_zero()) fail("torsion 3-form requested for a structure with tau2 != 0");

  const Scalar sixth = s.star(alg.wedge(dphi, phi)).as_scalar().scaled(Rational(1, 6));
  const Form line1 = phi.scaled(sixth) - s.star(dphi) +
                     s.star(alg.wedge(data.tau1, phi)).scaled(Rational(4));
  const Form line2 =
      phi.scaled(data.tau0.scaled(Rational(1, 6))) + s.star(alg.wedge(data.tau1, phi)) - data.tau3;
  if (line1 != line2) fail("the two torsion 3-form expressions disagree");
  return line1;
}

TwoFormParts project_two_form(const Form& alpha, const GTwoStructure& s) {
  const auto deg = alpha.homogeneous_degree();
  if (!alpha.is_zero() && (!deg || *deg != 2)) fail("projection requires a 2-form");
  const ExtAlgebra& alg = s.algebra();
  const Form swp = s.star(alg.wedge(alpha, s.phi()));
  TwoFormParts parts{(alpha + swp).scaled(Rational(1, 3)),
                     (alpha.scaled(Rational(2)) - swp).scaled(Rational(1, 3))};
  return parts;
}

std::optional<InstantonFailure> g2_instanton_check(const std::vector<Form>& components,
                                                   const GTwoStructure& s) {
  for (std::size_t i = 0; i < components.size(); ++i) {
    Form residual = s.algebra().wedge(components[i], s.psi());
    if (!residual.is_zero()) return InstantonFailure{i, std::move(residual)};
  }
  return std::nullopt;
}

}  // namespace g2calc
