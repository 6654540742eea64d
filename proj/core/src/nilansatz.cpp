#include "g2calc/nilansatz.hpp"

#include <map>
#include <utility>

#include "g2calc/error.hpp"

namespace g2calc {

namespace {

using Mat3 = std::vector<std::vector<Scalar>>;

void shape_check(const Mat3& m, const char* label) {
  if (m.size() != 3) fail(std::string(label) + " must be 3x3");
  for (const auto& row : m)
    if (row.size() != 3) fail(std::string(label) + " must be 3x3");
}

bool same_scalar(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 out(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar s;
      for (int k = 0; k < 3; ++k) s = s + a[i][k] * b[k][j];
      out[i][j] = std::move(s);
    }
  return out;
}

Scalar det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool is_diagonal(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !m[i][j].is_zero()) return false;
  return true;
}

// The quadratic basis (e67, e75, e56) paired with (e5, e6, e7).
std::array<Form, 3> fibre_squares(const std::shared_ptr<const Coframe>& cf) {
  const Scalar one(1);
  return {Form::term(cf, {"e6", "e7"}, one), Form::term(cf, {"e7", "e5"}, one),
          Form::term(cf, {"e5", "e6"}, one)};
}

bool constant_coefficients(const Form& a) {
  for (const auto& [m, c] : a.terms()) {
    (void)m;
    if (!c.as_constant().has_value()) return false;
  }
  return true;
}

std::vector<Form> instanton_curvature(const NilScenario& sc, const PureAlgebra& alg) {
  const auto& cf = alg.coframe();
  const auto sq = fibre_squares(cf);
  std::vector<Form> F;
  F.reserve(3);
  for (int k = 0; k < 3; ++k) {
    Form f = alg.d(Form::generator(cf, "e" + std::to_string(5 + k)));
    for (int l = 0; l < 3; ++l) f += sq[static_cast<std::size_t>(l)].scaled(sc.c[k][l]);
    F.push_back(std::move(f));
  }
  return F;
}

}  // namespace

std::shared_ptr<const Coframe> nil_coframe() {
  return Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
}

NilScenario make_nil_scenario(Mat3 a_plus, Mat3 a_minus, Mat3 b, Mat3 c, Mat3 pairing) {
  shape_check(a_plus, "a_plus");
  shape_check(a_minus, "a_minus");
  shape_check(b, "b");
  shape_check(c, "c");
  shape_check(pairing, "pairing");
  Mat3 bt(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) bt[i][j] = b[j][i];
  const Mat3 gram = mat_mul(bt, b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar want(i == j ? 1 : 0);
      if (!same_scalar(gram[i][j], want)) fail("frame rotation is not orthogonal");
    }
  if (!same_scalar(det3(b), Scalar(1))) fail("frame rotation must have determinant 1");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (!same_scalar(pairing[i][j], pairing[j][i])) fail("pairing must be symmetric");
  return NilScenario{std::move(a_plus), std::move(a_minus), std::move(b), std::move(c),
                     std::move(pairing)};
}

NilScenario standard_nil_scenario(const Scalar& delta, const std::array<Scalar, 3>& eps, Mat3 b,
                                  Mat3 c, Mat3 pairing) {
  const Scalar z;
  Mat3 a_plus = {{delta, z, z}, {z, delta, z}, {z, z, delta}};
  Mat3 a_minus = {{eps[0], z, z}, {z, eps[1], z}, {z, z, eps[2]}};
  return make_nil_scenario(std::move(a_plus), std::move(a_minus), std::move(b), std::move(c),
                           std::move(pairing));
}

Mat3 instanton_c(const NilScenario& sc) {
  Mat3 out = mat_mul(sc.a_plus, sc.b);
  for (auto& row : out)
    for (auto& entry : row) entry = entry.scaled(Rational(-2));
  return out;
}

Mat3 rotation_from_quaternion(const std::shared_ptr<const ParamSet>& ps, long long w, long long x,
                              long long y, long long z) {
  const long long n = w * w + x * x + y * y + z * z;
  if (n == 0) fail("quaternion must be nonzero");
  const Rational norm(static_cast<long>(n));
  const auto ent = [&](long long v) {
    return Scalar::constant(ps, Rational(static_cast<long>(v)) / norm);
  };
  return {{ent(w * w + x * x - y * y - z * z), ent(2 * (x * y - w * z)), ent(2 * (x * z + w * y))},
          {ent(2 * (x * y + w * z)), ent(w * w - x * x + y * y - z * z), ent(2 * (y * z - w * x))},
          {ent(2 * (x * z - w * y)), ent(2 * (y * z + w * x)), ent(w * w - x * x - y * y + z * z)}};
}

NilBuild build_phi(const NilScenario& sc) {
  const auto cf = nil_coframe();
  auto alg = std::make_shared<const PureAlgebra>(build_ansatz_table(cf, sc.a_plus, sc.a_minus),
                                                 FrameMetric::identity(cf));
  std::array<Form, 3> E = {Form::zero(cf), Form::zero(cf), Form::zero(cf)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      E[static_cast<std::size_t>(i)] +=
          Form::generator(cf, "e" + std::to_string(5 + j)).scaled(sc.b[i][j]);
  Form phi = alg->wedge(E[0], E[1], E[2]);
  for (int i = 0; i < 3; ++i)
    phi += alg->wedge(sigma_plus(cf, i + 1), E[static_cast<std::size_t>(i)]);
  GTwoStructure s = constant_coefficients(phi)
                        ? GTwoStructure::from_phi(*alg, phi)
                        : GTwoStructure::with_metric(*alg, phi, FrameMetric::identity(cf));
  if (!s.metric().is_identity()) fail("rotated-frame 3-form did not induce the identity metric");
  const auto sq = fibre_squares(cf);
  Form psi_expected = Form::term(cf, {"e1", "e2", "e3", "e4"}, Scalar(1));
  for (int i = 0; i < 3; ++i) {
    Form rotated = Form::zero(cf);
    for (int j = 0; j < 3; ++j) rotated += sq[static_cast<std::size_t>(j)].scaled(sc.b[i][j]);
    psi_expected += alg->wedge(sigma_plus(cf, i + 1), rotated);
  }
  if (!(s.psi() == psi_expected)) fail("dual 4-form disagrees with its rotated-frame expansion");
  return NilBuild{std::move(alg), std::move(s)};
}

InstantonVerdict instanton_equivalence(const NilScenario& sc) {
  shape_check(sc.c, "c");
  const NilBuild nb = build_phi(sc);
  InstantonVerdict v;
  v.wedge_condition = !g2_instanton_check(instanton_curvature(sc, *nb.algebra), nb.structure)
                           .has_value();
  v.matrix_condition = true;
  const Mat3 forced = instanton_c(sc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!same_scalar(sc.c[i][j], forced[i][j])) v.matrix_condition = false;
  return v;
}

CoclosedReport coclosed_consequence(const NilScenario& sc) {
  const NilBuild nb = build_phi(sc);
  Form dpsi = nb.algebra->d(nb.structure.psi());
  const bool instanton =
      !g2_instanton_check(instanton_curvature(sc, *nb.algebra), nb.structure).has_value();
  return CoclosedReport{instanton, dpsi.is_zero(), std::move(dpsi)};
}

GaugeField nil_gauge_field(const NilScenario& sc, const std::shared_ptr<const Coframe>& cf,
                           const DiffTable& table) {
  shape_check(sc.c, "c");
  if (!is_diagonal(sc.c)) fail("gauge interpretation needs a diagonal bracket matrix");
  GaugeAlgebra ga = diagonal_bracket_algebra({sc.c[0][0], sc.c[1][1], sc.c[2][2]}, sc.pairing);
  std::vector<Form> connection = {Form::generator(cf, "e5"), Form::generator(cf, "e6"),
                                  Form::generator(cf, "e7")};
  return make_gauge_field(std::move(ga), std::move(connection), table);
}

Form bianchi_catalog(const NilScenario& sc) {
  const NilBuild nb = build_phi(sc);
  const Form T = torsion_threeform(nb.structure);
  const GaugeField gf = nil_gauge_field(sc, nb.algebra->coframe(), nb.algebra->table());
  return bianchi_residual(T, gf, nb.algebra->table());
}

SolveResult solve_general_pairing(const NilScenario& sc) {
  shape_check(sc.c, "c");
  if (!is_diagonal(sc.c)) fail("gauge interpretation needs a diagonal bracket matrix");
  // Collect the ring parameters actually used by the structure data.
  std::shared_ptr<const ParamSet> ps;
  const auto widen = [&](const Mat3& m) {
    for (const auto& row : m)
      for (const auto& entry : row)
        if (!ps || entry.param_set()->size() > ps->size()) ps = entry.param_set();
  };
  widen(sc.a_plus);
  widen(sc.a_minus);
  widen(sc.b);
  widen(sc.c);
  const auto used = [&](const std::string& name) {
    for (const Mat3* m : {&sc.a_plus, &sc.a_minus, &sc.b, &sc.c})
      for (const auto& row : *m)
        for (const auto& entry : row)
          if (entry.uses(name)) return true;
    return false;
  };
  std::vector<std::string> frees;
  std::vector<std::string> signs;
  for (std::size_t i = 0; ps && i < ps->size(); ++i) {
    const auto& p = ps->at(i);
    if (!used(p.name)) continue;
    switch (p.kind) {
      case ParamKind::Free:
        frees.push_back(p.name);
        break;
      case ParamKind::Sign:
        signs.push_back(p.name);
        break;
      default:
        fail("circle parameters are not supported when solving for a pairing");
    }
  }
  // The residual depends quadratically on the free parameters, so imposing
  // the identity at unit and pairwise-unit values is equivalent to imposing
  // it identically.  Sign parameters are enumerated outright.
  std::vector<std::map<std::string, Rational>> samples;
  if (frees.empty()) {
    samples.push_back({});
  } else {
    for (std::size_t i = 0; i < frees.size(); ++i) {
      std::map<std::string, Rational> m;
      for (const auto& f : frees) m[f] = Rational(0);
      m[frees[i]] = Rational(1);
      samples.push_back(m);
      for (std::size_t j = i + 1; j < frees.size(); ++j) {
        auto pairm = m;
        pairm[frees[j]] = Rational(1);
        samples.push_back(std::move(pairm));
      }
    }
  }
  const std::vector<std::string> unknowns = {"p11", "p12", "p13", "p22", "p23", "p33"};
  auto psu = ParamSetBuilder()
                 .free_param("p11")
                 .free_param("p12")
                 .free_param("p13")
                 .free_param("p22")
                 .free_param("p23")
                 .free_param("p33")
                 .build();
  const auto sp = [&](const char* n) { return Scalar::param(psu, n); };
  const Mat3 pairing_unknown = {{sp("p11"), sp("p12"), sp("p13")},
                                {sp("p12"), sp("p22"), sp("p23")},
                                {sp("p13"), sp("p23"), sp("p33")}};
  std::vector<LinearEquation> equations;
  const std::size_t assignments = static_cast<std::size_t>(1) << signs.size();
  for (std::size_t mask = 0; mask < assignments; ++mask) {
    for (const auto& sample : samples) {
      auto values = sample;
      for (std::size_t k = 0; k < signs.size(); ++k)
        values[signs[k]] = Rational((mask >> k) & 1 ? -1 : 1);
      const auto instantiate = [&](const Mat3& m) {
        Mat3 out(3, std::vector<Scalar>(3));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const Scalar lifted = ps ? m[i][j].lifted_to(ps) : m[i][j];
            const auto c = lifted.substituted(values).as_constant();
            if (!c) fail("structure data did not become constant under sampling");
            out[i][j] = Scalar::constant(psu, *c);
          }
        return out;
      };
      NilScenario inst{instantiate(sc.a_plus), instantiate(sc.a_minus), instantiate(sc.b),
                       instantiate(sc.c), pairing_unknown};
      const NilBuild nb = build_phi(inst);
      const Form T = torsion_threeform(nb.structure);
      const GaugeField gf = nil_gauge_field(inst, nb.algebra->coframe(), nb.algebra->table());
      const Form residual = bianchi_residual(T, gf, nb.algebra->table());
      auto part = equations_from_form(residual, {unknowns.begin(), unknowns.end()});
      equations.insert(equations.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
  }
  SolveResult result = solve_linear_system(equations);
  if (result.solved()) {
    // Entries the identity never touches are free, not uniquely zero.
    for (const auto& u : unknowns)
      if (!result.solution.count(u)) {
        result.solution.emplace(u, Scalar::zero(psu));
        result.free_unknowns.push_back(u);
        result.status = SolveStatus::Underdetermined;
      }
  }
  return result;
}

PairingSolution solve_abelian_pairing(const std::array<Scalar, 3>& eps, PairingSignature sig) {
  std::array<Rational, 3> sq{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto c = eps[i].as_constant();
    if (!c) fail("signature selection needs constant eps entries");
    sq[i] = *c * *c;
  }
  const Rational total = sq[0] + sq[1] + sq[2];
  PairingSolution out;
  if (total.is_zero()) {
    out.possible = true;
    switch (sig) {
      case PairingSignature::PositiveDefinite:
        out.diag = {Rational(1), Rational(1), Rational(1)};
        break;
      case PairingSignature::Mixed21:
        out.diag = {Rational(1), Rational(1), Rational(-1)};
        break;
      case PairingSignature::Mixed12:
        out.diag = {Rational(1), Rational(-1), Rational(-1)};
        break;
      case PairingSignature::NegativeDefinite:
        out.diag = {Rational(-1), Rational(-1), Rational(-1)};
        break;
    }
    out.note = "all eps vanish: the model is flat and any pairing satisfies the identity";
    return out;
  }
  if (sig == PairingSignature::NegativeDefinite) {
    out.possible = false;
    out.note =
        "impossible: with a negative-definite pairing every p_i eps_i^2 is <= 0, so their sum "
        "cannot equal the positive value eps1^2 + eps2^2 + eps3^2";
    return out;
  }
  std::size_t lead = 0;
  while (sq[lead].is_zero()) ++lead;
  std::array<std::size_t, 2> rest{};
  for (std::size_t i = 0, k = 0; i < 3; ++i)
    if (i != lead) rest[k++] = i;
  std::array<Rational, 3> diag{};
  switch (sig) {
    case PairingSignature::PositiveDefinite:
      diag[rest[0]] = Rational(1, 2);
      diag[rest[1]] = Rational(1, 2);
      break;
    case PairingSignature::Mixed21:
      diag[rest[0]] = Rational(1, 2);
      diag[rest[1]] = Rational(-1);
      break;
    case PairingSignature::Mixed12:
      diag[rest[0]] = Rational(-1);
      diag[rest[1]] = Rational(-1);
      break;
    case PairingSignature::NegativeDefinite:
      break;
  }
  diag[lead] = (total - diag[rest[0]] * sq[rest[0]] - diag[rest[1]] * sq[rest[1]]) / sq[lead];
  const Rational check = diag[0] * sq[0] + diag[1] * sq[1] + diag[2] * sq[2];
  if (check != total) fail("pairing reconstruction failed its substitution check");
  int pos = 0;
  int neg = 0;
  for (const auto& d : diag) {
    if (d.is_zero()) fail("pairing reconstruction produced a singular entry");
    d.is_negative() ? ++neg : ++pos;
  }
  const int want_pos = sig == PairingSignature::PositiveDefinite ? 3
                       : sig == PairingSignature::Mixed21        ? 2
                                                                 : 1;
  if (pos != want_pos || neg != 3 - want_pos)
    fail("pairing reconstruction produced the wrong signature");
  out.possible = true;
  out.diag = diag;
  out.note = "verified: p1 eps1^2 + p2 eps2^2 + p3 eps3^2 = eps1^2 + eps2^2 + eps3^2";
  return out;
}

SlSupplement sl2_supplement(const NilScenario& sc) {
  const Scalar delta = sc.a_plus[0][0];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (!same_scalar(sc.a_plus[i][j], i == j ? delta : Scalar()))
        fail("gauge extension expects a_plus = delta Id");
      if (i != j && !sc.a_minus[i][j].is_zero()) fail("gauge extension expects a_minus diagonal");
      const Scalar want_b(i != j ? 0 : (i == 0 ? 1 : -1));
      if (!same_scalar(sc.b[i][j], want_b))
        fail("gauge extension expects the frame rotation diag(1,-1,-1)");
    }
  const Mat3 forced = instanton_c(sc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (!same_scalar(sc.c[i][j], forced[i][j]))
        fail("gauge extension expects the bracket matrix -2 a_plus b");
      const Scalar want_p =
          i != j ? Scalar() : Scalar(Rational(i == 0 ? -1 : 1, 3));
      if (!same_scalar(sc.pairing[i][j], want_p))
        fail("gauge extension expects the pairing diag(-1,1,1)/3");
    }
  const std::array<Scalar, 3> epsv = {sc.a_minus[0][0], sc.a_minus[1][1], sc.a_minus[2][2]};

  const NilBuild nb = build_phi(sc);
  const Form T7 = torsion_threeform(nb.structure);

  auto ext = Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "xi"});
  DiffTable table = build_ansatz_table(ext, sc.a_plus, sc.a_minus);
  table.set("xi", sigma_minus(ext, 1));
  std::map<std::string, Form> images;
  for (int i = 1; i <= 7; ++i) {
    const std::string name = "e" + std::to_string(i);
    images.emplace(name, Form::generator(ext, name));
  }
  const Form T = Form::mapped_generators(T7, images, ext);

  Scalar y0 = (delta * delta).scaled(Rational(8, 3)) + (epsv[0] * epsv[0]).scaled(Rational(4, 3)) +
              (epsv[1] * epsv[1]).scaled(Rational(2, 3)) +
              (epsv[2] * epsv[2]).scaled(Rational(2, 3));
  const Scalar z;
  std::vector<std::vector<std::vector<Scalar>>> brackets(
      4, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4, z)));
  brackets[2][3][1] = sc.c[0][0];
  brackets[3][2][1] = -sc.c[0][0];
  brackets[3][1][2] = sc.c[1][1];
  brackets[1][3][2] = -sc.c[1][1];
  brackets[1][2][3] = sc.c[2][2];
  brackets[2][1][3] = -sc.c[2][2];
  std::vector<std::vector<Scalar>> pair4(4, std::vector<Scalar>(4, z));
  pair4[0][0] = y0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) pair4[i + 1][j + 1] = sc.pairing[i][j];
  GaugeAlgebra ga = make_gauge_algebra({"Y0", "Y5", "Y6", "Y7"}, std::move(brackets),
                                       std::move(pair4));
  std::vector<Form> connection = {Form::generator(ext, "xi"), Form::generator(ext, "e5"),
                                  Form::generator(ext, "e6"), Form::generator(ext, "e7")};
  GaugeField field = make_gauge_field(std::move(ga), std::move(connection), table);
  Form residual = bianchi_residual(T, field, table);
  return SlSupplement{std::move(ext), std::move(table), std::move(field), std::move(y0),
                      std::move(residual)};
}

}  // namespace g2calc
