#include "g2calc/su3.hpp"

#include <bit>
#include <set>
#include <utility>

#include "g2calc/error.hpp"
#include "g2calc/linsolve.hpp"

namespace g2calc {

namespace {

// All strictly increasing index lists of length d over the coframe, in a
// fixed deterministic order.
std::vector<Form::Monomial> basis_monomials(const Coframe& cf, int d) {
  std::vector<Form::Monomial> out;
  const unsigned n = static_cast<unsigned>(cf.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    Form::Monomial m;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) m.push_back(static_cast<std::int32_t>(i));
    out.push_back(std::move(m));
  }
  return out;
}

std::shared_ptr<const ParamSet> widen(std::shared_ptr<const ParamSet> base,
                                      const std::shared_ptr<const ParamSet>& cand) {
  if (cand->same_as(*base) || cand->is_prefix_of(*base)) return base;
  if (base->is_prefix_of(*cand)) return cand;
  fail("incompatible parameter sets in torsion input");
}

std::shared_ptr<const ParamSet> widen_with_form(std::shared_ptr<const ParamSet> base,
                                                const Form& f) {
  for (const auto& [m, c] : f.terms()) base = widen(std::move(base), c.param_set());
  return base;
}

// The coefficient omega_ab for any index pair (antisymmetric; zero on the
// diagonal).
Scalar omega_entry(const Form& omega, std::size_t a, std::size_t b) {
  if (a == b) return Scalar();
  if (a < b)
    return omega.coefficient_at({static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
  return -omega.coefficient_at({static_cast<std::int32_t>(b), static_cast<std::int32_t>(a)});
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Underdetermined: return "underdetermined";
    case SolveStatus::Inconsistent: return "inconsistent";
    case SolveStatus::ParametricPivot: return "parametric pivot";
  }
  return "?";
}

}  // namespace

std::vector<std::vector<Scalar>> complex_structure_from_omega(const Form& omega,
                                                              const FrameMetric& metric) {
  if (!omega.coframe()->same_as(*metric.coframe()))
    fail("complex structure: omega and metric live on different coframes");
  const std::size_t n = metric.size();
  std::vector<std::vector<Scalar>> J(n, std::vector<Scalar>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      Scalar acc;
      for (std::size_t b = 0; b < n; ++b)
        acc = acc + metric.inverse_entry(c, b) * omega_entry(omega, a, b);
      J[c][a] = acc;
    }
  return J;
}

SUThreeStructure make_su3_structure(Form omega, Form upsilon_plus, Form upsilon_minus,
                                    FrameMetric metric) {
  auto J = complex_structure_from_omega(omega, metric);
  SUThreeStructure s{std::move(omega), std::move(upsilon_plus), std::move(upsilon_minus),
                     std::move(metric), std::move(J)};
  SuValidation v = su3_validate(s);
  if (!v.ok) fail("invalid su3 structure: " + v.reason);
  return s;
}

SuValidation su3_validate(const SUThreeStructure& s) {
  auto bad = [](std::string reason) { return SuValidation{false, std::move(reason)}; };
  const auto& cf = s.omega.coframe();
  if (!cf->is_pure()) return bad("coframe is not pure");
  if (!s.upsilon_plus.coframe()->same_as(*cf) || !s.upsilon_minus.coframe()->same_as(*cf) ||
      !s.metric.coframe()->same_as(*cf))
    return bad("data lives on different coframes");
  const std::size_t n = cf->size();
  if (s.J.size() != n) return bad("complex structure matrix has wrong size");
  for (const auto& row : s.J)
    if (row.size() != n) return bad("complex structure matrix has wrong size");

  if (s.omega.homogeneous_degree() != 2) return bad("omega is not a 2-form");
  if (s.upsilon_plus.homogeneous_degree() != 3) return bad("upsilon_plus is not a 3-form");
  if (s.upsilon_minus.homogeneous_degree() != 3) return bad("upsilon_minus is not a 3-form");

  if (!Form::wedge_pure(s.omega, s.upsilon_plus).is_zero())
    return bad("omega ^ upsilon_plus != 0");
  if (!Form::wedge_pure(s.omega, s.upsilon_minus).is_zero())
    return bad("omega ^ upsilon_minus != 0");

  Form w3 = Form::wedge_pure(Form::wedge_pure(s.omega, s.omega), s.omega);
  if (Form::wedge_pure(s.upsilon_plus, s.upsilon_minus) != w3.scaled(Rational(2, 3)))
    return bad("normalization: upsilon_plus ^ upsilon_minus != (2/3) omega^3");
  if (w3 != s.metric.volume().scaled(Rational(6)))
    return bad("orientation: omega^3 != 6 vol");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < n; ++k) acc = acc + s.J[i][k] * s.J[k][j];
      Scalar expected = (i == j) ? Scalar(Rational(-1)) : Scalar();
      if (!(acc == expected)) return bad("J^2 != -Id");
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar rhs;
      for (std::size_t c = 0; c < n; ++c) rhs = rhs + s.J[c][a] * s.metric.entry(c, b);
      if (!(omega_entry(s.omega, a, b) == rhs)) return bad("omega is not g(J., .)");
    }

  if (apply_complex_structure(s, s.upsilon_plus) != s.upsilon_minus)
    return bad("J upsilon_plus != upsilon_minus");
  return SuValidation{};
}

Form apply_complex_structure(const SUThreeStructure& s, const Form& a) {
  const auto& cf = a.coframe();
  if (!cf->same_as(*s.omega.coframe()))
    fail("apply_complex_structure: form lives on a different coframe");
  const std::size_t n = cf->size();
  std::vector<Form> image;
  image.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Form f(cf);
    for (std::size_t j = 0; j < n; ++j)
      if (!s.J[i][j].is_zero()) f.add_term({static_cast<std::int32_t>(j)}, s.J[i][j]);
    image.push_back(std::move(f));
  }
  Form out(cf);
  for (const auto& [m, c] : a.terms()) {
    Form acc = Form::from_scalar(cf, c);
    for (std::int32_t idx : m) acc = Form::wedge_pure(acc, image[static_cast<std::size_t>(idx)]);
    out += acc;
  }
  return out;
}

Scalar omega_component(const SUThreeStructure& s, const Form& beta) {
  Form top = Form::wedge_pure(beta, Form::wedge_pure(s.omega, s.omega));
  return s.metric.hodge(top).as_scalar() * Scalar(Rational(1, 6));
}

SUTorsion su3_torsion(const SUThreeStructure& s, const DiffTable& table) {
  SuValidation v = su3_validate(s);
  if (!v.ok) fail("torsion of an invalid su3 structure: " + v.reason);
  const auto& cf = s.omega.coframe();

  const Form& w = s.omega;
  const Form& Up = s.upsilon_plus;
  const Form& Um = s.upsilon_minus;
  const Form dw = dform(table, w);
  const Form dUp = dform(table, Up);
  const Form dUm = dform(table, Um);
  const Form w2 = Form::wedge_pure(w, w);

  auto base = ParamSet::none();
  for (const Form* f : {&w, &Up, &Um, &dw, &dUp, &dUm}) base = widen_with_form(base, *f);
  for (std::size_t i = 0; i < cf->size(); ++i)
    for (std::size_t j = 0; j < cf->size(); ++j) {
      base = widen(base, s.metric.entry(i, j).param_set());
      base = widen(base, s.J[i][j].param_set());
    }

  auto b1 = basis_monomials(*cf, 1);
  auto b2 = basis_monomials(*cf, 2);
  auto b3 = basis_monomials(*cf, 3);
  std::vector<std::string> names = {"pi0", "sigma0"};
  auto push_block = [&names](const char* prefix, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  };
  push_block("pi1_", b1.size());
  push_block("nu1_", b1.size());
  push_block("pi2_", b2.size());
  push_block("sigma2_", b2.size());
  push_block("nu3_", b3.size());
  auto ps = base->extended_with_free(names);

  auto symbolic = [&](const char* prefix, const std::vector<Form::Monomial>& basis) {
    Form f(cf);
    for (std::size_t i = 0; i < basis.size(); ++i)
      f.add_term(basis[i], Scalar::param(ps, prefix + std::to_string(i)));
    return f;
  };
  Scalar pi0 = Scalar::param(ps, "pi0");
  Scalar sigma0 = Scalar::param(ps, "sigma0");
  Form pi1 = symbolic("pi1_", b1);
  Form nu1 = symbolic("nu1_", b1);
  Form pi2 = symbolic("pi2_", b2);
  Form sigma2 = symbolic("sigma2_", b2);
  Form nu3 = symbolic("nu3_", b3);

  auto W = [](const Form& a, const Form& b) { return Form::wedge_pure(a, b); };
  auto decomposition_residuals = [&](const Scalar& p0, const Scalar& s0, const Form& p1,
                                     const Form& n1, const Form& p2, const Form& s2,
                                     const Form& n3) {
    std::vector<Form> r;
    r.push_back(dw - (Up.scaled(s0).scaled(Rational(-3, 2)) + Um.scaled(p0).scaled(Rational(3, 2)) +
                      W(n1, w) + n3));
    r.push_back(dUp - (w2.scaled(p0) + W(p1, Up) - W(p2, w)));
    r.push_back(dUm - (w2.scaled(s0) + W(p1, Um) - W(s2, w)));
    return r;
  };

  std::vector<Form> residuals = decomposition_residuals(pi0, sigma0, pi1, nu1, pi2, sigma2, nu3);
  residuals.push_back(apply_complex_structure(s, pi2) - pi2);
  residuals.push_back(apply_complex_structure(s, sigma2) - sigma2);
  residuals.push_back(W(pi2, w2));
  residuals.push_back(W(sigma2, w2));
  residuals.push_back(W(nu3, w));
  residuals.push_back(W(nu3, Up));
  residuals.push_back(W(nu3, Um));

  std::set<std::string> unknowns(names.begin(), names.end());
  std::vector<LinearEquation> eqs;
  for (const Form& r : residuals) {
    auto part = equations_from_form(r, unknowns);
    eqs.insert(eqs.end(), part.begin(), part.end());
  }
  SolveResult res = solve_linear_system(eqs);
  if (res.status != SolveStatus::Unique)
    fail(std::string("torsion components are not uniquely determined (") +
         status_name(res.status) + (res.detail.empty() ? "" : "; " + res.detail) + ")");

  // The solved components cannot involve the solver unknowns any more, so
  // express them back over the structure's own parameters.
  auto sol = [&res, &base](const std::string& name) {
    auto it = res.solution.find(name);
    return it == res.solution.end() ? Scalar() : it->second.restricted_to(base);
  };
  auto sol_form = [&](const char* prefix, const std::vector<Form::Monomial>& basis) {
    Form f(cf);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], sol(prefix + std::to_string(i)));
    return f;
  };
  SUTorsion tor{sol("pi0"),           sol("sigma0"),         sol_form("pi1_", b1),
                sol_form("nu1_", b1), sol_form("pi2_", b2),  sol_form("sigma2_", b2),
                sol_form("nu3_", b3), std::nullopt};

  for (const Form& r : decomposition_residuals(tor.pi0, tor.sigma0, tor.pi1, tor.nu1, tor.pi2,
                                               tor.sigma2, tor.nu3))
    if (!r.is_zero()) fail("torsion reconstruction failed");

  if (tor.pi2.is_zero() && tor.sigma2.is_zero() && tor.pi1 == tor.nu1.scaled(Rational(2)))
    tor.T_omega = bismut_torsion(s, tor);
  return tor;
}

Form bismut_torsion(const SUThreeStructure& s, const SUTorsion& tor) {
  if (!tor.pi2.is_zero() || !tor.sigma2.is_zero())
    fail("bismut torsion requires pi2 = sigma2 = 0");
  if (tor.pi1 != tor.nu1.scaled(Rational(2))) fail("bismut torsion requires pi1 = 2 nu1");
  const Form& Up = s.upsilon_plus;
  const Form& Um = s.upsilon_minus;
  Form line2 = Up.scaled(tor.pi0).scaled(Rational(1, 2)) +
               Um.scaled(tor.sigma0).scaled(Rational(1, 2)) +
               Form::wedge_pure(apply_complex_structure(s, tor.nu1), s.omega) +
               apply_complex_structure(s, tor.nu3);
  Form dw = Up.scaled(tor.sigma0).scaled(Rational(-3, 2)) +
            Um.scaled(tor.pi0).scaled(Rational(3, 2)) + Form::wedge_pure(tor.nu1, s.omega) +
            tor.nu3;
  Form line1 = apply_complex_structure(s, dw) + Up.scaled(tor.pi0).scaled(Rational(2)) +
               Um.scaled(tor.sigma0).scaled(Rational(2));
  if (line1 != line2) fail("bismut torsion: the two defining expressions disagree");
  return line2;
}

std::optional<InstantonFailure> su3_instanton_check(const std::vector<Form>& components,
                                                    const SUThreeStructure& s) {
  Form w2 = Form::wedge_pure(s.omega, s.omega);
  for (std::size_t i = 0; i < components.size(); ++i) {
    Form r = Form::wedge_pure(components[i], w2);
    if (!r.is_zero()) return InstantonFailure{i, r};
    r = Form::wedge_pure(components[i], s.upsilon_plus);
    if (!r.is_zero()) return InstantonFailure{i, r};
  }
  return std::nullopt;
}

Form su3_bianchi_residual(const Form& T_omega, const GaugeField& gf, const DiffTable& table) {
  return bianchi_residual(T_omega, gf, table);
}

}  // namespace g2calc
