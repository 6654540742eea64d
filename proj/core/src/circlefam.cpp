#include "g2calc/circlefam.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2calc/catalog.hpp"
#include "g2calc/error.hpp"

namespace g2calc {

namespace {

Form term1(const std::shared_ptr<const Coframe>& cf, const std::vector<std::string>& names,
           const Rational& r = Rational(1)) {
  return Form::term(cf, names, Scalar(r));
}

// Grows ps to cover other; the two sets must be nested.
void widen(std::shared_ptr<const ParamSet>& ps, const std::shared_ptr<const ParamSet>& other) {
  if (other->same_as(*ps)) return;
  if (ps->is_prefix_of(*other)) {
    ps = other;
    return;
  }
  if (!other->is_prefix_of(*ps)) fail("circle scenario: input parameter sets are not nested");
}

void widen_over_form(std::shared_ptr<const ParamSet>& ps, const Form& a) {
  for (const auto& [mono, coeff] : a.terms()) {
    (void)mono;
    widen(ps, coeff.param_set());
  }
}

// Every parameter set appearing in the inputs must live inside ps.
void require_within(const std::shared_ptr<const ParamSet>& ps, const DiffTable& base_table,
                    const DiffTable& total_table, const SUThreeStructure& su3) {
  auto seen = ParamSet::none();
  widen_over_form(seen, su3.omega);
  widen_over_form(seen, su3.upsilon_plus);
  widen_over_form(seen, su3.upsilon_minus);
  for (std::size_t i = 0; i < su3.metric.size(); ++i)
    for (std::size_t j = 0; j < su3.metric.size(); ++j)
      widen(seen, su3.metric.entry(i, j).param_set());
  const auto scan_table = [&seen](const DiffTable& t) {
    const auto& cf = t.coframe();
    for (std::size_t i = 0; i < cf->size(); ++i)
      if (t.has(cf->name(i))) widen_over_form(seen, t.at(cf->name(i)));
  };
  scan_table(base_table);
  scan_table(total_table);
  if (!(seen->same_as(*ps) || seen->is_prefix_of(*ps)))
    fail("circle scenario: the supplied ring does not cover the scenario inputs");
}

struct StandardForms {
  Form omega;
  Form up;
  Form um;
};

// The flat model omega = e12 + e34 + e56 with its standard 3-form pair,
// written in the given generator order.
StandardForms standard_structure(const std::shared_ptr<const Coframe>& cf,
                                 const std::vector<std::string>& n) {
  StandardForms out{
      term1(cf, {n[0], n[1]}) + term1(cf, {n[2], n[3]}) + term1(cf, {n[4], n[5]}),
      term1(cf, {n[0], n[2], n[4]}) - term1(cf, {n[0], n[3], n[5]}) -
          term1(cf, {n[1], n[2], n[5]}) - term1(cf, {n[1], n[3], n[4]}),
      term1(cf, {n[0], n[2], n[5]}) + term1(cf, {n[0], n[3], n[4]}) +
          term1(cf, {n[1], n[2], n[4]}) - term1(cf, {n[1], n[3], n[5]})};
  return out;
}

// The product of two three-spheres in the split frame
// f(2i-1) = (e_i - e_{i+3})/2, f(2i) = (e_i + e_{i+3})/2.
DiffTable split_product_table(const std::shared_ptr<const Coframe>& cf,
                              const std::vector<std::string>& f) {
  const AlgebraEntry& entry = catalog_entry("s3s3");
  std::map<std::string, Form> e_to_f;
  for (int i = 0; i < 3; ++i) {
    const Form odd = Form::generator(cf, f[static_cast<std::size_t>(2 * i)]);
    const Form even = Form::generator(cf, f[static_cast<std::size_t>(2 * i + 1)]);
    e_to_f.emplace("e" + std::to_string(i + 1), odd + even);
    e_to_f.emplace("e" + std::to_string(i + 4), even - odd);
  }
  DiffTable table(cf);
  for (int i = 0; i < 3; ++i) {
    const Form ei = Form::generator(entry.coframe, "e" + std::to_string(i + 1));
    const Form ei3 = Form::generator(entry.coframe, "e" + std::to_string(i + 4));
    table.set(f[static_cast<std::size_t>(2 * i)],
              Form::mapped_generators(dform(entry.table, (ei - ei3).scaled(Rational(1, 2))),
                                      e_to_f, cf));
    table.set(f[static_cast<std::size_t>(2 * i + 1)],
              Form::mapped_generators(dform(entry.table, (ei + ei3).scaled(Rational(1, 2))),
                                      e_to_f, cf));
  }
  return table;
}

}  // namespace

CircleScenario make_circle_scenario(const std::shared_ptr<const ParamSet>& ps,
                                    const DiffTable& base_table, SUThreeStructure su3,
                                    const DiffTable& total_table, const std::string& eta,
                                    const std::string& cos_name, const std::string& sin_name) {
  const auto& bcf = base_table.coframe();
  if (bcf->size() != 6) fail("circle scenario: the base coframe must have six generators");
  for (std::size_t i = 0; i < 6; ++i)
    if (bcf->degree(i) != 1) fail("circle scenario: the base coframe must be pure");
  if (su3.metric.coframe() != bcf)
    fail("circle scenario: the structure must live on the base coframe");
  const SuValidation check = su3_validate(su3);
  if (!check.ok) fail("circle scenario: " + check.reason);

  const auto& tcf = total_table.coframe();
  if (tcf->size() != 7) fail("circle scenario: the total coframe must have seven generators");
  for (std::size_t i = 0; i < 7; ++i)
    if (tcf->degree(i) != 1) fail("circle scenario: the total coframe must be pure");
  if (tcf->index_of(eta) < 0) fail("circle scenario: the total coframe must contain " + eta);
  if (bcf->index_of(eta) >= 0) fail("circle scenario: " + eta + " must be a new generator");
  for (std::size_t i = 0; i < 6; ++i)
    if (tcf->index_of(bcf->name(i)) < 0)
      fail("circle scenario: the total coframe must contain the base generator " + bcf->name(i));

  require_within(ps, base_table, total_table, su3);
  const int ci = ps->index_of(cos_name);
  const int si = ps->index_of(sin_name);
  if (ci < 0 || si < 0 || ps->at(static_cast<std::size_t>(ci)).kind != ParamKind::Cos ||
      ps->at(static_cast<std::size_t>(si)).kind != ParamKind::Sin ||
      ps->at(static_cast<std::size_t>(ci)).partner != si)
    fail("circle scenario: (" + cos_name + ", " + sin_name + ") is not a circle pair of the ring");

  std::map<std::string, Form> to_total;
  for (std::size_t i = 0; i < 6; ++i)
    to_total.emplace(bcf->name(i), Form::generator(tcf, bcf->name(i)));
  for (std::size_t i = 0; i < 6; ++i) {
    const std::string& g = bcf->name(i);
    if (!total_table.has(g) || !(total_table.at(g) == Form::mapped_generators(
                                                          base_table.at(g), to_total, tcf)))
      fail("circle scenario: the total table must restrict to the base table on " + g);
  }
  if (!total_table.has(eta)) fail("circle scenario: the total table must define d " + eta);
  const Form deta = total_table.at(eta);
  if (!deta.is_zero() && deta.homogeneous_degree() != 2)
    fail("circle scenario: d " + eta + " must be a 2-form");
  if (!deta.contracted(eta).is_zero())
    fail("circle scenario: d " + eta + " must not involve " + eta);
  if (!d_squared_check(total_table).ok())
    fail("circle scenario: the total table violates d^2 = 0");

  // Product metric with orientation vol = eta ^ vol_base.
  std::vector<std::vector<Scalar>> gram(7, std::vector<Scalar>(7));
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      const bool ei = tcf->name(i) == eta;
      const bool ej = tcf->name(j) == eta;
      if (ei || ej) {
        gram[i][j] = Scalar(ei && ej ? 1 : 0);
      } else {
        gram[i][j] = su3.metric.entry(static_cast<std::size_t>(bcf->index_of(tcf->name(i))),
                                      static_cast<std::size_t>(bcf->index_of(tcf->name(j))));
      }
    }
  }
  FrameMetric total_metric(tcf, std::move(gram), su3.metric.volume_coefficient());

  std::map<std::string, Form> to_base;
  for (std::size_t i = 0; i < 6; ++i) to_base.emplace(bcf->name(i), Form::generator(bcf, bcf->name(i)));
  Form deta_base = Form::mapped_generators(deta, to_base, bcf);

  auto base = std::make_shared<const PureAlgebra>(base_table, su3.metric);
  auto total = std::make_shared<const PureAlgebra>(total_table, std::move(total_metric));
  Scalar c = Scalar::param(ps, cos_name);
  Scalar s = Scalar::param(ps, sin_name);
  return CircleScenario{std::move(base),      std::move(total), std::move(su3), eta,
                        total_table.at(eta),  std::move(deta_base), std::move(c), std::move(s)};
}

Form lifted_to_total(const CircleScenario& cs, const Form& on_base) {
  const auto& bcf = cs.base->coframe();
  const auto& tcf = cs.total->coframe();
  std::map<std::string, Form> images;
  for (std::size_t i = 0; i < bcf->size(); ++i)
    images.emplace(bcf->name(i), Form::generator(tcf, bcf->name(i)));
  return Form::mapped_generators(on_base, images, tcf);
}

GTwoStructure build_phi_t(const CircleScenario& cs) {
  const auto& tcf = cs.total->coframe();
  const Form eta_f = Form::generator(tcf, cs.eta);
  const Form omega_t = lifted_to_total(cs, cs.su3.omega);
  const Form up_t = lifted_to_total(cs, cs.su3.upsilon_plus);
  const Form um_t = lifted_to_total(cs, cs.su3.upsilon_minus);
  const Form phi = Form::wedge_pure(eta_f, omega_t) + up_t.scaled(cs.c) - um_t.scaled(cs.s);
  GTwoStructure st = GTwoStructure::with_metric(*cs.total, phi, cs.total->metric());

  const Form psi_expected = Form::wedge_pure(omega_t, omega_t).scaled(Rational(1, 2)) -
                            Form::wedge_pure(eta_f, up_t.scaled(cs.s) + um_t.scaled(cs.c));
  if (!(st.psi() == psi_expected))
    fail("family member: the dual 4-form is not (1/2) omega^2 - eta ^ (s Up + c Um)");

  // Product rule of the star, on every basis monomial of the base.
  const auto& bcf = cs.base->coframe();
  for (unsigned mask = 0; mask < 64u; ++mask) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask & (1u << i)) names.push_back(bcf->name(i));
    const bool odd = names.size() % 2 != 0;
    const Form alpha_t = lifted_to_total(cs, Form::term(bcf, names, Scalar(1)));
    const Form star6_t = lifted_to_total(cs, cs.su3.metric.hodge(Form::term(bcf, names, Scalar(1))));
    if (!(st.star(alpha_t) == Form::wedge_pure(star6_t, eta_f)))
      fail("family member: star(a) = star6(a) ^ eta fails on a basis monomial");
    if (!(st.star(Form::wedge_pure(alpha_t, eta_f)) ==
          (odd ? star6_t.scaled(Rational(-1)) : star6_t)))
      fail("family member: star(a ^ eta) = (-1)^k star6(a) fails on a basis monomial");
  }
  return st;
}

IntegrabilityReport integrability_test(const CircleScenario& cs) {
  SUTorsion tor = su3_torsion(cs.su3, cs.base->table());
  const bool s2 = tor.sigma2.is_zero();
  const bool p2 = tor.pi2.is_zero();
  const bool p1 = (tor.pi1 - tor.nu1.scaled(Rational(2))).is_zero();
  const bool jinv = apply_complex_structure(cs.su3, cs.deta_base) == cs.deta_base;
  Scalar trace = omega_component(cs.su3, cs.deta_base);
  const bool traceless = trace.is_zero();
  return IntegrabilityReport{s2, p2, p1, jinv, traceless, std::move(trace), std::move(tor)};
}

Form integrability_obstruction(const CircleScenario& cs) {
  const SUTorsion tor = su3_torsion(cs.su3, cs.base->table());
  const Form anti =
      (cs.deta_base - apply_complex_structure(cs.su3, cs.deta_base)).scaled(Rational(1, 2));
  const Form um_rot = cs.su3.upsilon_plus.scaled(cs.s) + cs.su3.upsilon_minus.scaled(cs.c);
  const Form omega2 = Form::wedge_pure(cs.su3.omega, cs.su3.omega);
  return Form::wedge_pure(anti, um_rot).scaled(Rational(2)) -
         Form::wedge_pure(tor.nu1, omega2).scaled(Rational(2)) +
         Form::wedge_pure(tor.pi1, omega2);
}

TorsionFamily torsion_family(const CircleScenario& cs) {
  const IntegrabilityReport rep = integrability_test(cs);
  if (!rep.integrable())
    fail("family torsion: needs sigma2 = pi2 = 0, pi1 = 2 nu1 and a J-invariant d eta");
  if (!rep.torsion.T_omega.has_value())
    fail("family torsion: the base torsion 3-form is missing despite the flags");

  GTwoStructure st = build_phi_t(cs);
  const Form T = torsion_threeform(st);

  const auto& tcf = cs.total->coframe();
  const Form eta_f = Form::generator(tcf, cs.eta);
  const Form omega_t = lifted_to_total(cs, cs.su3.omega);
  const Form up_t = lifted_to_total(cs, cs.su3.upsilon_plus);
  const Form um_t = lifted_to_total(cs, cs.su3.upsilon_minus);
  const Form t_base = lifted_to_total(cs, *rep.torsion.T_omega);
  const Scalar& tr = rep.deta_trace;

  const Form expected = Form::wedge_pure(eta_f, cs.deta - omega_t.scaled(tr.scaled(Rational(2)))) +
                        t_base + (up_t.scaled(cs.c) - um_t.scaled(cs.s)).scaled(tr);
  if (!(T == expected))
    fail("family torsion: the generic pipeline disagrees with "
         "eta ^ (d eta - 2 tr omega) + T_base + tr (c Up - s Um)");

  const TorsionData td = torsion_forms(st);
  const Scalar tau0_expected =
      (cs.c * rep.torsion.pi0 - cs.s * rep.torsion.sigma0).scaled(Rational(12, 7)) +
      tr.scaled(Rational(6, 7));
  if (!(td.tau0 == tau0_expected))
    fail("family torsion: tau0 is not (12/7)(c pi0 - s sigma0) + (6/7) tr");
  // The eta component is forced by d psi_t = 4 tau1 ^ psi_t: the circle
  // derivative of the 4-form pulls s dUp + c dUm through eta, whose omega^2
  // parts are s pi0 + c sigma0.
  const Form tau1_expected =
      eta_f.scaled((cs.c * rep.torsion.sigma0 + cs.s * rep.torsion.pi0).scaled(Rational(1, 2))) +
      lifted_to_total(cs, rep.torsion.nu1).scaled(Rational(1, 2));
  if (!(td.tau1 == tau1_expected))
    fail("family torsion: tau1 is not (1/2)(c sigma0 + s pi0) eta + (1/2) nu1");
  if (!(td.tau0 == st.inner(T, st.phi()) * Scalar(Rational(6, 7))))
    fail("family torsion: tau0 is not (6/7) <T, phi>");
  if (!(td.tau1 == st.star(Form::wedge_pure(T, st.phi())).scaled(Rational(-1, 4))))
    fail("family torsion: tau1 is not -(1/4) star(T ^ phi)");

  const bool t_indep = rep.deta_traceless;
  if (t_indep && !(T == Form::wedge_pure(eta_f, cs.deta) + t_base))
    fail("family torsion: a trace-free d eta must give the fixed torsion eta ^ d eta + T_base");
  return TorsionFamily{std::move(st), T, td.tau0, td.tau1, t_indep};
}

LiftReport lift_solution(const CircleScenario& cs, const GaugeField& gf) {
  const IntegrabilityReport rep = integrability_test(cs);
  if (!rep.integrable())
    fail("lift: needs sigma2 = pi2 = 0, pi1 = 2 nu1 and a J-invariant d eta");
  if (!rep.deta_traceless) fail("lift: needs a trace-free d eta");

  const bool has_field = gf.algebra.size() > 0;
  if (has_field) {
    if (const auto bad = su3_instanton_check(gf.curvature, cs.su3))
      fail("lift: curvature component " + std::to_string(bad->index) +
           " is not an instanton on the base");
  }
  const Form ff_base = has_field ? pairing_wedge(gf) : Form::zero(cs.base->coframe());
  if (!(dform(cs.base->table(), *rep.torsion.T_omega) - ff_base).is_zero())
    fail("lift: the base identity d T_base = <F ^ F> fails for the supplied field");

  const TorsionFamily fam = torsion_family(cs);
  std::vector<Form> components;
  for (const Form& F : gf.curvature) components.push_back(lifted_to_total(cs, F));
  components.push_back(cs.deta);
  const bool instanton = !g2_instanton_check(components, fam.structure).has_value();

  const auto& ps = cs.c.param_set();
  if (ps->has("u_eta")) fail("lift: the parameter name u_eta is reserved");
  const auto psu = ps->extended_with_free({"u_eta"});
  const Form dT = dform(cs.total->table(), fam.T);
  const Form ff_total = lifted_to_total(cs, ff_base);
  const Form deta2 = Form::wedge_pure(cs.deta, cs.deta);
  const Form with_unknown = dT - deta2.scaled(Scalar::param(psu, "u_eta")) - ff_total;
  SolveResult scale = solve_linear_system(equations_from_form(with_unknown, {"u_eta"}));
  if (scale.solved() && scale.solution.find("u_eta") == scale.solution.end()) {
    // The coefficient never appears: d eta ^ d eta drops out.
    scale.solution.emplace("u_eta", Scalar::zero(psu));
    scale.free_unknowns.push_back("u_eta");
    scale.status = SolveStatus::Underdetermined;
  }
  Form residual = with_unknown;
  bool closed = false;
  if (scale.solved()) {
    residual = dT - deta2.scaled(scale.solution.at("u_eta")) - ff_total;
    closed = residual.is_zero();
  }
  return LiftReport{instanton, std::move(scale), std::move(residual), closed};
}

LiftReport lift_solution(const CircleScenario& cs) {
  const GaugeField none{GaugeAlgebra{{}, {}, {}}, {}, {}, std::nullopt};
  return lift_solution(cs, none);
}

CircleScenario s3s3_circle_scenario() {
  auto ps = ParamSetBuilder().circle_pair("ct", "st").build();
  const std::vector<std::string> f = {"f1", "f2", "f3", "f4", "f5", "f6"};
  auto cf6 = Coframe::pure(f);
  const DiffTable base_table = split_product_table(cf6, f);
  const StandardForms forms = standard_structure(cf6, f);
  SUThreeStructure su3 =
      make_su3_structure(forms.omega, forms.up, forms.um, FrameMetric::identity(cf6));

  std::vector<std::string> names7 = f;
  names7.push_back("eta");
  auto cf7 = Coframe::pure(names7);
  std::map<std::string, Form> embed;
  for (const auto& n : f) embed.emplace(n, Form::generator(cf7, n));
  DiffTable total(cf7);
  for (const auto& n : f) total.set(n, Form::mapped_generators(base_table.at(n), embed, cf7));
  total.set("eta", term1(cf7, {"f1", "f3"}) + term1(cf7, {"f2", "f4"}));
  return make_circle_scenario(ps, base_table, std::move(su3), total, "eta", "ct", "st");
}

CircleScenario n32_circle_scenario() {
  auto ps = ParamSetBuilder().circle_pair("ct", "st").build();
  const std::vector<std::string> b = {"e2", "e3", "e4", "e5", "e6", "e7"};
  auto cf6 = Coframe::pure(b);
  DiffTable base(cf6);
  base.set("e2", Form::zero(cf6));
  base.set("e3", Form::zero(cf6));
  base.set("e4", Form::zero(cf6));
  base.set("e5", term1(cf6, {"e2", "e4"}, Rational(-2)));
  base.set("e6", term1(cf6, {"e2", "e3"}, Rational(-2)));
  base.set("e7", term1(cf6, {"e3", "e4"}, Rational(2)));

  const Form omega = term1(cf6, {"e2", "e7"}) + term1(cf6, {"e3", "e5"}) - term1(cf6, {"e4", "e6"});
  const Form up = term1(cf6, {"e3", "e4", "e7"}) + term1(cf6, {"e5", "e6", "e7"}) -
                  term1(cf6, {"e2", "e3", "e6"}) - term1(cf6, {"e2", "e4", "e5"});
  const Form um = (term1(cf6, {"e2", "e3", "e4"}) + term1(cf6, {"e2", "e5", "e6"}) +
                   term1(cf6, {"e4", "e5", "e7"}) + term1(cf6, {"e3", "e6", "e7"}))
                      .scaled(Rational(-1));
  SUThreeStructure su3 = make_su3_structure(omega, up, um, FrameMetric::identity(cf6));

  auto cf7 = Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  std::map<std::string, Form> embed;
  for (const auto& n : b) embed.emplace(n, Form::generator(cf7, n));
  DiffTable total(cf7);
  total.set("e1", Form::zero(cf7));
  for (const auto& n : b) total.set(n, Form::mapped_generators(base.at(n), embed, cf7));
  return make_circle_scenario(ps, base, std::move(su3), total, "e1", "ct", "st");
}

CircleScenario heisenberg_circle_scenario(const Scalar& a, const Scalar& b, const Scalar& c,
                                          const std::string& cos_name,
                                          const std::string& sin_name) {
  auto ps = ParamSet::none();
  widen(ps, a.param_set());
  widen(ps, b.param_set());
  widen(ps, c.param_set());
  const std::vector<std::string> n = {"e1", "e2", "e3", "e4", "e5", "e6"};
  auto cf6 = Coframe::pure(n);
  DiffTable base(cf6);
  for (const auto& g : n) base.set(g, Form::zero(cf6));
  const StandardForms forms = standard_structure(cf6, n);
  SUThreeStructure su3 =
      make_su3_structure(forms.omega, forms.up, forms.um, FrameMetric::identity(cf6));

  auto cf7 = Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  std::map<std::string, Form> embed;
  for (const auto& g : n) embed.emplace(g, Form::generator(cf7, g));
  DiffTable total(cf7);
  for (const auto& g : n) total.set(g, Form::zero(cf7));
  total.set("e7", Form::term(cf7, {"e1", "e2"}, a) + Form::term(cf7, {"e3", "e4"}, b) +
                      Form::term(cf7, {"e5", "e6"}, c));
  return make_circle_scenario(ps, base, std::move(su3), total, "e7", cos_name, sin_name);
}

CircleScenario heisenberg_circle_scenario() {
  auto ps = ParamSetBuilder()
                .circle_pair("ct", "st")
                .free_param("a")
                .free_param("b")
                .free_param("c")
                .build();
  return heisenberg_circle_scenario(Scalar::param(ps, "a"), Scalar::param(ps, "b"),
                                    Scalar::param(ps, "c"), "ct", "st");
}

CircleScenario heisenberg_traceless_scenario() {
  auto ps = ParamSetBuilder().circle_pair("ct", "st").free_param("a").free_param("b").build();
  const Scalar a = Scalar::param(ps, "a");
  const Scalar b = Scalar::param(ps, "b");
  return heisenberg_circle_scenario(a, b, -(a + b), "ct", "st");
}

HeisenbergReport heisenberg_family(const CircleScenario& cs) {
  const auto& bcf = cs.base->coframe();
  std::vector<std::string> n;
  for (std::size_t i = 0; i < bcf->size(); ++i) n.push_back(bcf->name(i));
  for (const auto& g : n)
    if (!cs.base->table().at(g).is_zero()) fail("torus family: the base must be flat");
  const StandardForms forms = standard_structure(bcf, n);
  if (!(cs.su3.omega == forms.omega && cs.su3.upsilon_plus == forms.up &&
        cs.su3.upsilon_minus == forms.um))
    fail("torus family: needs the standard structure in the base generator order");
  if (!cs.su3.metric.is_identity()) fail("torus family: needs the identity metric");

  const Scalar a = cs.deta_base.coefficient({n[0], n[1]});
  const Scalar b = cs.deta_base.coefficient({n[2], n[3]});
  const Scalar c = cs.deta_base.coefficient({n[4], n[5]});
  const Form diag = Form::term(bcf, {n[0], n[1]}, a) + Form::term(bcf, {n[2], n[3]}, b) +
                    Form::term(bcf, {n[4], n[5]}, c);
  if (!(cs.deta_base == diag)) fail("torus family: d eta must be a e12 + b e34 + c e56");

  const TorsionFamily fam = torsion_family(cs);
  const auto& tcf = cs.total->coframe();
  const Form dT = dform(cs.total->table(), fam.T);
  const Form s1 = term1(tcf, {n[0], n[1]}) - term1(tcf, {n[2], n[3]});
  const Form s2 = term1(tcf, {n[2], n[3]}) - term1(tcf, {n[4], n[5]});
  const Form s3 = term1(tcf, {n[0], n[4]}) + term1(tcf, {n[1], n[5]});
  const bool seeds = !g2_instanton_check({s1, s2, s3}, fam.structure).has_value();

  const Form sq1 = Form::wedge_pure(s1, s1);
  const Form sq2 = Form::wedge_pure(s2, s2);
  const Form sq3 = Form::wedge_pure(s3, s3);
  const Scalar qa = a * a + b * b - a * b + a * c + b * c;
  const Scalar qb = b * b + c * c + a * b + a * c - b * c;
  const Scalar qc = a * a + c * c + a * b - a * c + b * c;
  const Form display =
      (sq1.scaled(qa) + sq2.scaled(qb) + sq3.scaled(qc)).scaled(Rational(1, 3));
  const bool disp = dT == display;

  const auto& ps = cs.c.param_set();
  for (const char* nm : {"u1", "u2", "u3"})
    if (ps->has(nm)) fail("torus family: the parameter names u1, u2, u3 are reserved");
  const auto psu = ps->extended_with_free({"u1", "u2", "u3"});
  const Form with_unknowns = dT - sq1.scaled(Scalar::param(psu, "u1")) -
                             sq2.scaled(Scalar::param(psu, "u2")) -
                             sq3.scaled(Scalar::param(psu, "u3"));
  SolveResult pairing = solve_linear_system(equations_from_form(with_unknowns, {"u1", "u2", "u3"}));

  bool family = false;
  if (pairing.solved() && pairing.solution.count("u1") && pairing.solution.count("u2") &&
      pairing.solution.count("u3")) {
    const Scalar d = a * b + b * c + c * a;
    const auto matches = [&pairing](const char* key, const Scalar& target) {
      return (pairing.solution.at(key) * Scalar(3) - target).is_zero();
    };
    family = matches("u1", (a - b) * (a - b) + d) && matches("u2", (b - c) * (b - c) + d) &&
             matches("u3", (a - c) * (a - c) + d);
  }
  return HeisenbergReport{seeds, dT, disp, std::move(pairing), family};
}

}  // namespace g2calc
