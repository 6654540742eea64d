#include "g2calc/sasakian.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <utility>

#include "g2calc/catalog.hpp"
#include "g2calc/error.hpp"
#include "g2calc/linsolve.hpp"

namespace g2calc {

namespace {

// Rewrites of the six transverse coordinate 2-forms over the self-dual /
// anti-self-dual generators: entry {i, j} -> {(w index, coefficient), ...}
// with indices into the graded coframe (w1p..w3p = 7..9, w1m..w3m = 10..12).
struct PairRule {
  std::int32_t gen;
  Rational coeff;
};

const std::map<std::pair<int, int>, std::array<PairRule, 2>>& pair_rules() {
  static const std::map<std::pair<int, int>, std::array<PairRule, 2>> rules = {
      {{0, 1}, {PairRule{7, Rational(1, 2)}, PairRule{10, Rational(1, 2)}}},
      {{0, 2}, {PairRule{8, Rational(1, 2)}, PairRule{11, Rational(1, 2)}}},
      {{0, 3}, {PairRule{9, Rational(1, 2)}, PairRule{12, Rational(1, 2)}}},
      {{1, 2}, {PairRule{9, Rational(1, 2)}, PairRule{12, Rational(-1, 2)}}},
      {{1, 3}, {PairRule{8, Rational(-1, 2)}, PairRule{11, Rational(1, 2)}}},
      {{2, 3}, {PairRule{7, Rational(1, 2)}, PairRule{10, Rational(-1, 2)}}},
  };
  return rules;
}

}  // namespace

SasAlgebra::SasAlgebra(bool with_connection)
    : table_(sasakian_table(sasakian_coframe(with_connection))),
      pure_cf_(Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7"})),
      round_metric_(FrameMetric::identity(pure_cf_)) {
  const auto& cf = table_.coframe();
  expansions_.reserve(14);
  for (int i = 0; i < 7; ++i) expansions_.push_back(Form::generator(pure_cf_, cf->name(i)));
  auto two = [&](const char* a1, const char* b1, const char* a2, const char* b2, int s) {
    return Form::term(pure_cf_, {a1, b1}, Scalar(1)) +
           Form::term(pure_cf_, {a2, b2}, Scalar(Rational(s)));
  };
  expansions_.push_back(two("e1", "e2", "e3", "e4", 1));   // w1p
  expansions_.push_back(two("e1", "e3", "e2", "e4", -1));  // w2p
  expansions_.push_back(two("e1", "e4", "e2", "e3", 1));   // w3p
  expansions_.push_back(two("e1", "e2", "e3", "e4", -1));  // w1m
  expansions_.push_back(two("e1", "e3", "e2", "e4", 1));   // w2m
  expansions_.push_back(two("e1", "e4", "e2", "e3", -1));  // w3m
  expansions_.push_back(Form::term(pure_cf_, {"e1", "e2", "e3", "e4"}, Scalar(1)));  // nu4
}

Form SasAlgebra::expanded(const Form& a) const {
  if (a.coframe()->same_as(*pure_cf_)) return a;
  if (!a.coframe()->same_as(*coframe())) fail("form does not live on this model's coframe");
  Form out(pure_cf_);
  for (const auto& [m, c] : a.terms()) {
    Form acc = Form::from_scalar(pure_cf_, c);
    for (std::int32_t idx : m) {
      if (static_cast<std::size_t>(idx) >= expansions_.size())
        fail("generator '" + coframe()->name(static_cast<std::size_t>(idx)) +
             "' has no local expansion");
      acc = Form::wedge_pure(acc, expansions_[static_cast<std::size_t>(idx)]);
    }
    out += acc;
  }
  return out;
}

Form SasAlgebra::reassembled(const Form& a) const {
  if (!a.coframe()->same_as(*pure_cf_)) fail("form does not live on the expansion coframe");
  Form out(coframe());
  for (const auto& [m, c] : a.terms()) {
    // A sorted monomial splits as (indices < 4) then (indices >= 4) with no
    // sign; the collected generators have even degree, so reattaching them
    // after the e5..e7 block costs no sign either.
    Form::Monomial shell;
    std::vector<int> trans;
    for (std::int32_t idx : m) {
      if (idx < 4)
        trans.push_back(idx);
      else
        shell.push_back(idx);
    }
    if (trans.size() == 2) {
      const auto& rules = pair_rules().at({trans[0], trans[1]});
      for (const auto& rule : rules) {
        Form::Monomial full = shell;
        full.push_back(rule.gen);
        out.add_term(std::move(full), c.scaled(rule.coeff));
      }
    } else if (trans.size() == 4) {
      Form::Monomial full = shell;
      full.push_back(13);
      out.add_term(std::move(full), c);
    } else {
      // 0, 1 or 3 transverse legs: the raw coordinate monomial is kept
      // (degree-1 indices agree between the two coframes).
      Form::Monomial full(trans.begin(), trans.end());
      full.insert(full.end(), shell.begin(), shell.end());
      out.add_term(std::move(full), c);
    }
  }
  return out;
}

Form SasAlgebra::wedge(const Form& a, const Form& b) const {
  return reassembled(Form::wedge_pure(expanded(a), expanded(b)));
}

Form SasAlgebra::star(const Form& a) const { return reassembled(round_metric_.hodge(expanded(a))); }

Form SasAlgebra::volume() const { return reassembled(round_metric_.volume()); }

Form sas_phi(const SasAlgebra& alg, SasKind kind) {
  const auto& cf = alg.coframe();
  auto leg = [&](const char* e, const char* w, const Rational& c) {
    return Form::term(cf, {e, w}, Scalar(c));
  };
  const Form e567 = Form::term(cf, {"e5", "e6", "e7"}, Scalar(1));
  switch (kind) {
    case SasKind::ts:
      return e567 + leg("e5", "w1p", 1) + leg("e6", "w2p", 1) + leg("e7", "w3p", -1);
    case SasKind::ts_hat:
      return e567 + leg("e5", "w1p", -1) + leg("e6", "w2p", -1) + leg("e7", "w3p", -1);
    case SasKind::np:
      return e567.scaled(Rational(-27, 125)) + leg("e5", "w1p", Rational(27, 25)) +
             leg("e6", "w2p", Rational(27, 25)) + leg("e7", "w3p", Rational(27, 25));
    case SasKind::np_hat:
      return e567.scaled(Rational(-27, 125)) + leg("e5", "w1p", Rational(-27, 25)) +
             leg("e6", "w2p", Rational(-27, 25)) + leg("e7", "w3p", Rational(27, 25));
  }
  fail("unknown structure kind");
}

GTwoStructure build_sas_structure(const SasAlgebra& alg, SasKind kind) {
  return GTwoStructure::from_phi(alg, sas_phi(alg, kind));
}

SasEigenvalues solve_instanton_eigenvalues(const SasAlgebra& alg, SasKind kind) {
  const GTwoStructure s = build_sas_structure(alg, kind);
  const auto& cf = alg.coframe();
  auto ps = ParamSetBuilder().free_param("lam1").free_param("lam2").free_param("lam3").build();
  const char* dirs[3] = {"e5", "e6", "e7"};
  const std::vector<std::vector<std::string>> complements = {
      {"e6", "e7"}, {"e7", "e5"}, {"e5", "e6"}};
  std::vector<LinearEquation> eqs;
  for (int i = 0; i < 3; ++i) {
    const std::string unknown = "lam" + std::to_string(i + 1);
    const Form f = alg.d(Form::generator(cf, dirs[i])) +
                   Form::term(cf, complements[static_cast<std::size_t>(i)],
                              Scalar::param(ps, unknown));
    const Form residual = alg.wedge(f, s.psi());
    auto part = equations_from_form(residual, {unknown});
    eqs.insert(eqs.end(), part.begin(), part.end());
  }
  const SolveResult sol = solve_linear_system(eqs);
  if (sol.status != SolveStatus::Unique)
    fail("instanton eigenvalue system did not determine all three eigenvalues: " + sol.detail);
  SasEigenvalues out;
  for (int i = 0; i < 3; ++i) {
    const auto c = sol.solution.at("lam" + std::to_string(i + 1)).as_constant();
    if (!c) fail("instanton eigenvalue is not rational");
    out.lambda[static_cast<std::size_t>(i)] = *c;
  }
  int pos = 0, neg = 0, zero = 0;
  for (const auto& l : out.lambda) {
    if (l.is_zero())
      ++zero;
    else if (l.is_negative())
      ++neg;
    else
      ++pos;
  }
  if (zero == 3)
    out.gauge_class = "abelian";
  else if (zero > 0)
    out.gauge_class = "degenerate";
  else if (pos == 3 || neg == 3)
    out.gauge_class = "su2";
  else
    out.gauge_class = "sl2r";
  return out;
}

std::vector<Form> connection_curvatures(const SasAlgebra& alg,
                                        const std::array<Rational, 3>& lambda) {
  const auto& cf = alg.coframe();
  const char* dirs[3] = {"e5", "e6", "e7"};
  const std::vector<std::vector<std::string>> complements = {
      {"e6", "e7"}, {"e7", "e5"}, {"e5", "e6"}};
  std::vector<Form> out;
  for (std::size_t i = 0; i < 3; ++i)
    out.push_back(alg.d(Form::generator(cf, dirs[i])) +
                  Form::term(cf, complements[i], Scalar(lambda[i])));
  return out;
}

std::vector<Form> asd_curvatures(const SasAlgebra& alg) {
  const auto& cf = alg.coframe();
  return {Form::generator(cf, "w1m"), Form::generator(cf, "w2m"), Form::generator(cf, "w3m")};
}

Form fs_curvature(const SasAlgebra& alg, const Scalar& k) {
  return Form::generator(alg.coframe(), "w1m").scaled(k);
}

CompositeBlock curvature_block(std::string label, std::vector<Form> curvatures, Scalar scale) {
  return CompositeBlock{std::move(label), std::move(curvatures), std::move(scale), std::nullopt};
}

CompositeBlock declared_block(std::string label, Form square, Scalar scale) {
  return CompositeBlock{std::move(label), {}, std::move(scale), std::move(square)};
}

Form block_square(const ExtAlgebra& alg, const CompositeBlock& block) {
  if (block.declared_square) {
    if (!block.curvatures.empty())
      fail("block '" + block.label + "' mixes declared and component curvature data");
    return block.declared_square->scaled(block.scale);
  }
  Form sum = alg.zero();
  for (const Form& f : block.curvatures) sum += alg.wedge(f, f);
  return sum.scaled(block.scale);
}

Form composite_bianchi_residual(const GTwoStructure& s,
                                const std::vector<CompositeBlock>& blocks) {
  const ExtAlgebra& alg = s.algebra();
  Form total = alg.zero();
  for (const CompositeBlock& block : blocks) {
    if (!block.curvatures.empty()) {
      if (auto bad = g2_instanton_check(block.curvatures, s))
        fail("block '" + block.label + "' component " + std::to_string(bad->index) +
             " is not an instanton: residual " + bad->residual.str());
    }
    total += block_square(alg, block);
  }
  return alg.d(torsion_threeform(s)) - total;
}

Form dt_family_residual(const GTwoStructure& s, SasKind kind, const Scalar& t) {
  if (kind != SasKind::ts && kind != SasKind::np)
    fail("the one-parameter family is stated for the ts and np structures only");
  const auto& alg = dynamic_cast<const SasAlgebra&>(s.algebra());
  const auto eigen = solve_instanton_eigenvalues(alg, kind);
  const std::vector<Form> F = connection_curvatures(alg, eigen.lambda);
  Form sum_ff = alg.zero();
  for (const Form& f : F) sum_ff += alg.wedge(f, f);

  const Form w1p = Form::generator(alg.coframe(), "w1p");
  const Form w1p2 = alg.wedge(w1p, w1p);
  const Form display = kind == SasKind::ts
                           ? s.psi().scaled(Rational(-16)) + w1p2.scaled(Rational(20))
                           : s.psi().scaled(Rational(-400, 81)) + w1p2.scaled(Rational(20));
  if (sum_ff != display)
    fail("squared-curvature display failed: sum F^F = " + sum_ff.str());

  const Scalar one(1);
  const Rational ff_scale = kind == SasKind::ts ? Rational(-1, 6) : Rational(-27, 50);
  const Rational w_scale = kind == SasKind::ts ? Rational(20, 6) : Rational(54, 5);
  const Form stated = sum_ff.scaled(t.scaled(ff_scale)) + w1p2.scaled(t.scaled(w_scale)) +
                      s.psi().scaled((one - t).scaled(Rational(8, 3)));
  return s.algebra().d(torsion_threeform(s)) - stated;
}

}  // namespace g2calc
