#include <doctest.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g2calc/catalog.hpp"
#include "g2calc/error.hpp"
#include "g2calc/su3.hpp"

using namespace g2calc;

namespace {

Form term(const std::shared_ptr<const Coframe>& cf, const std::vector<std::string>& names,
          const Rational& c = Rational(1)) {
  return Form::term(cf, names, Scalar(c));
}

// The standard model on an abstract orthonormal frame.
struct StandardData {
  std::shared_ptr<const Coframe> cf;
  Form omega;
  Form up;
  Form um;
};

StandardData standard_model(const std::vector<std::string>& n) {
  auto cf = Coframe::pure(n);
  Form omega = term(cf, {n[0], n[1]}) + term(cf, {n[2], n[3]}) + term(cf, {n[4], n[5]});
  Form up = term(cf, {n[0], n[2], n[4]}) - term(cf, {n[0], n[3], n[5]}) -
            term(cf, {n[1], n[2], n[5]}) - term(cf, {n[1], n[3], n[4]});
  Form um = term(cf, {n[0], n[2], n[5]}) + term(cf, {n[0], n[3], n[4]}) +
            term(cf, {n[1], n[2], n[4]}) - term(cf, {n[1], n[3], n[5]});
  return {std::move(cf), std::move(omega), std::move(up), std::move(um)};
}

const std::vector<std::string> kF = {"f1", "f2", "f3", "f4", "f5", "f6"};

// The split-frame differential table of the product model:
// f(2i-1) = (e_i - e_(i+3))/2, f(2i) = (e_i + e_(i+3))/2.
DiffTable split_frame_table(const std::shared_ptr<const Coframe>& cf) {
  const AlgebraEntry& entry = catalog_entry("s3s3");
  std::map<std::string, Form> e_to_f;
  for (int i = 0; i < 3; ++i) {
    const Form odd = Form::generator(cf, kF[static_cast<std::size_t>(2 * i)]);
    const Form even = Form::generator(cf, kF[static_cast<std::size_t>(2 * i + 1)]);
    e_to_f.emplace("e" + std::to_string(i + 1), odd + even);
    e_to_f.emplace("e" + std::to_string(i + 4), even - odd);
  }
  DiffTable table(cf);
  for (int i = 0; i < 3; ++i) {
    const Form ei = Form::generator(entry.coframe, "e" + std::to_string(i + 1));
    const Form ei3 = Form::generator(entry.coframe, "e" + std::to_string(i + 4));
    table.set(kF[static_cast<std::size_t>(2 * i)],
              Form::mapped_generators(dform(entry.table, (ei - ei3).scaled(Rational(1, 2))),
                                      e_to_f, cf));
    table.set(kF[static_cast<std::size_t>(2 * i + 1)],
              Form::mapped_generators(dform(entry.table, (ei + ei3).scaled(Rational(1, 2))),
                                      e_to_f, cf));
  }
  return table;
}

}  // namespace

TEST_CASE("complex structure derivation and validation") {
  auto d = standard_model(kF);
  auto s = make_su3_structure(d.omega, d.up, d.um, FrameMetric::identity(d.cf));

  // J f1 = -f2, J f2 = f1, and so on pairwise.
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(s.J[2 * k][2 * k + 1] == Scalar(-1));
    CHECK(s.J[2 * k + 1][2 * k] == Scalar(1));
    CHECK(s.J[2 * k][2 * k].is_zero());
  }
  CHECK(apply_complex_structure(s, Form::generator(d.cf, "f1")) ==
        Form::generator(d.cf, "f2").scaled(Rational(-1)));
  CHECK(apply_complex_structure(s, s.omega) == s.omega);
  CHECK(apply_complex_structure(s, s.upsilon_plus) == s.upsilon_minus);
  CHECK(apply_complex_structure(s, s.upsilon_minus) == s.upsilon_plus.scaled(Rational(-1)));

  CHECK(omega_component(s, s.omega) == Scalar(1));
  CHECK(omega_component(s, term(d.cf, {"f1", "f2"})) == Scalar(Rational(1, 3)));
  CHECK(omega_component(s, term(d.cf, {"f1", "f3"})).is_zero());

  SUBCASE("scaling omega alone breaks the normalization") {
    SUThreeStructure bad = s;
    bad.omega = s.omega.scaled(Rational(2));
    const auto v = su3_validate(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("normalization") != std::string::npos);
  }
  SUBCASE("swapping the 3-forms flips the normalization sign") {
    SUThreeStructure bad = s;
    std::swap(bad.upsilon_plus, bad.upsilon_minus);
    CHECK_FALSE(su3_validate(bad).ok);
  }
  SUBCASE("negating J keeps J^2 = -Id but breaks compatibility") {
    SUThreeStructure bad = s;
    for (auto& row : bad.J)
      for (auto& x : row) x = -x;
    const auto v = su3_validate(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("g(J., .)") != std::string::npos);
  }
  SUBCASE("a rescaled metric breaks the orientation normalization") {
    FrameMetric scaled =
        FrameMetric::diagonal(d.cf, std::vector<Scalar>(6, Scalar(2)), Scalar(8));
    SUThreeStructure bad{s.omega, s.upsilon_plus, s.upsilon_minus, scaled, s.J};
    const auto v = su3_validate(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("orientation") != std::string::npos);
  }
}

TEST_CASE("flat structure has vanishing torsion") {
  auto d = standard_model(kF);
  auto s = make_su3_structure(d.omega, d.up, d.um, FrameMetric::identity(d.cf));
  DiffTable table(d.cf);
  for (const auto& n : kF) table.set(n, Form::zero(d.cf));
  const SUTorsion tor = su3_torsion(s, table);
  CHECK(tor.pi0.is_zero());
  CHECK(tor.sigma0.is_zero());
  CHECK(tor.pi1.is_zero());
  CHECK(tor.nu1.is_zero());
  CHECK(tor.pi2.is_zero());
  CHECK(tor.sigma2.is_zero());
  CHECK(tor.nu3.is_zero());
  REQUIRE(tor.T_omega.has_value());
  CHECK(tor.T_omega->is_zero());
}

TEST_CASE("torsion of the nilpotent model") {
  // Base frame of the rank-two step: d e5 = -2 e24, d e6 = -2 e23,
  // d e7 = 2 e34.
  auto cf = Coframe::pure({"e2", "e3", "e4", "e5", "e6", "e7"});
  DiffTable table(cf);
  table.set("e2", Form::zero(cf));
  table.set("e3", Form::zero(cf));
  table.set("e4", Form::zero(cf));
  table.set("e5", term(cf, {"e2", "e4"}, Rational(-2)));
  table.set("e6", term(cf, {"e2", "e3"}, Rational(-2)));
  table.set("e7", term(cf, {"e3", "e4"}, Rational(2)));

  const Form omega = term(cf, {"e2", "e7"}) + term(cf, {"e3", "e5"}) - term(cf, {"e4", "e6"});
  const Form up = term(cf, {"e3", "e4", "e7"}) + term(cf, {"e5", "e6", "e7"}) -
                  term(cf, {"e2", "e3", "e6"}) - term(cf, {"e2", "e4", "e5"});
  const Form um = (term(cf, {"e2", "e3", "e4"}) + term(cf, {"e2", "e5", "e6"}) +
                   term(cf, {"e4", "e5", "e7"}) + term(cf, {"e3", "e6", "e7"}))
                      .scaled(Rational(-1));
  auto s = make_su3_structure(omega, up, um, FrameMetric::identity(cf));

  // J pairs the legs of omega: J e2 = -e7, J e3 = -e5, J e4 = e6.
  CHECK(apply_complex_structure(s, Form::generator(cf, "e2")) ==
        Form::generator(cf, "e7").scaled(Rational(-1)));
  CHECK(apply_complex_structure(s, Form::generator(cf, "e3")) ==
        Form::generator(cf, "e5").scaled(Rational(-1)));
  CHECK(apply_complex_structure(s, Form::generator(cf, "e4")) == Form::generator(cf, "e6"));

  const SUTorsion tor = su3_torsion(s, table);
  CHECK(tor.pi0 == Scalar(1));
  CHECK(tor.sigma0.is_zero());
  CHECK(tor.pi1.is_zero());
  CHECK(tor.nu1.is_zero());
  CHECK(tor.pi2.is_zero());
  CHECK(tor.sigma2.is_zero());
  CHECK(tor.nu3 == term(cf, {"e2", "e3", "e4"}, Rational(-9, 2)) +
                       (term(cf, {"e2", "e5", "e6"}) + term(cf, {"e4", "e5", "e7"}) +
                        term(cf, {"e3", "e6", "e7"}))
                           .scaled(Rational(3, 2)));

  const Form expected_T = term(cf, {"e2", "e3", "e6"}, Rational(-2)) +
                          term(cf, {"e2", "e4", "e5"}, Rational(-2)) +
                          term(cf, {"e3", "e4", "e7"}, Rational(2)) +
                          term(cf, {"e5", "e6", "e7"}, Rational(-4));
  REQUIRE(tor.T_omega.has_value());
  CHECK(*tor.T_omega == expected_T);
  CHECK(bismut_torsion(s, tor) == expected_T);

  // The canonical curvatures solve d T_omega = <F ^ F> with the standard
  // pairing: F1 = -2(e24 + e67), F2 = -2(e23 - e57), F3 = 2(e34 - e56).
  const Form F1 = (term(cf, {"e2", "e4"}) + term(cf, {"e6", "e7"})).scaled(Rational(-2));
  const Form F2 = (term(cf, {"e2", "e3"}) - term(cf, {"e5", "e7"})).scaled(Rational(-2));
  const Form F3 = (term(cf, {"e3", "e4"}) - term(cf, {"e5", "e6"})).scaled(Rational(2));
  CHECK_FALSE(su3_instanton_check({F1, F2, F3}, s).has_value());
  const auto algebra = make_gauge_algebra(
      {"Y1", "Y2", "Y3"},
      std::vector<std::vector<std::vector<Scalar>>>(
          3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3))),
      diagonal_pairing({Scalar(1), Scalar(1), Scalar(1)}));
  const GaugeField gf{algebra, {}, {F1, F2, F3}, std::nullopt};
  CHECK(su3_bianchi_residual(expected_T, gf, table).is_zero());

  // A non-instanton component is reported with its residual.
  const auto failure = su3_instanton_check({F1, omega}, s);
  REQUIRE(failure.has_value());
  CHECK(failure->index == 1);
  CHECK_FALSE(failure->residual.is_zero());
}

TEST_CASE("torsion of the product model in the split frame") {
  auto cf = Coframe::pure(kF);
  const DiffTable table = split_frame_table(cf);
  const auto report = d_squared_check(table);
  CHECK(report.ok());
  CHECK(report.checked.size() == 6);

  auto d = standard_model(kF);
  auto s = make_su3_structure(d.omega, d.up, d.um, FrameMetric::identity(cf));
  const SUTorsion tor = su3_torsion(s, table);

  // Only sigma0 and nu3 survive; cross-check the scalars against the
  // volume extractions star(d Upsilon ^ omega) / 6.
  CHECK(tor.pi0.is_zero());
  CHECK_FALSE(tor.sigma0.is_zero());
  CHECK(tor.pi1.is_zero());
  CHECK(tor.nu1.is_zero());
  CHECK(tor.pi2.is_zero());
  CHECK(tor.sigma2.is_zero());
  CHECK_FALSE(tor.nu3.is_zero());
  const FrameMetric& g = s.metric;
  CHECK(tor.pi0 == g.hodge(Form::wedge_pure(dform(table, s.upsilon_plus), s.omega)).as_scalar() *
                       Scalar(Rational(1, 6)));
  CHECK(tor.sigma0 ==
        g.hodge(Form::wedge_pure(dform(table, s.upsilon_minus), s.omega)).as_scalar() *
            Scalar(Rational(1, 6)));

  // The canonical torsion exists and is closed.
  REQUIRE(tor.T_omega.has_value());
  CHECK(dform(table, *tor.T_omega).is_zero());

  // f13 + f24 is primitive (1,1), hence an instanton curvature.
  const Form dxi = term(cf, {"f1", "f3"}) + term(cf, {"f2", "f4"});
  CHECK_FALSE(su3_instanton_check({dxi}, s).has_value());
  CHECK(omega_component(s, dxi).is_zero());
  CHECK(apply_complex_structure(s, dxi) == dxi);

  SUBCASE("rotating the 3-form pair rotates the scalar torsion") {
    const Rational sigma0 = tor.sigma0.as_constant().value();
    auto ps = ParamSetBuilder().circle_pair("ct", "st").build();
    const Scalar ct = Scalar::param(ps, "ct");
    const Scalar st = Scalar::param(ps, "st");
    const Form up_rot = d.up.scaled(ct) - d.um.scaled(st);
    const Form um_rot = d.up.scaled(st) + d.um.scaled(ct);
    auto rotated = make_su3_structure(d.omega, up_rot, um_rot, FrameMetric::identity(cf));
    const SUTorsion rtor = su3_torsion(rotated, table);
    CHECK(rtor.pi0 == st.scaled(-sigma0));
    CHECK(rtor.sigma0 == ct.scaled(sigma0));
    CHECK(rtor.pi1.is_zero());
    CHECK(rtor.nu1.is_zero());
    CHECK(rtor.pi2.is_zero());
    CHECK(rtor.sigma2.is_zero());
    // The combination pi0 Up + sigma0 Um is rotation invariant.
    CHECK(up_rot.scaled(rtor.pi0) + um_rot.scaled(rtor.sigma0) ==
          d.um.scaled(Scalar(sigma0)));
    REQUIRE(rtor.T_omega.has_value());
  }
}

TEST_CASE("bianchi residual of an abelian instanton field") {
  // The split-frame product table, extended by a circle direction xi with
  // d xi = f13 + f24.
  auto cf6 = Coframe::pure(kF);
  const DiffTable base_table = split_frame_table(cf6);
  std::vector<std::string> names7 = kF;
  names7.push_back("xi");
  auto cf7 = Coframe::pure(names7);
  std::map<std::string, Form> f_embed;
  for (const auto& n : kF) f_embed.emplace(n, Form::generator(cf7, n));

  DiffTable table(cf7);
  for (const auto& n : kF) table.set(n, Form::mapped_generators(base_table.at(n), f_embed, cf7));
  const Form dxi =
      Form::term(cf7, {"f1", "f3"}, Scalar(1)) + Form::term(cf7, {"f2", "f4"}, Scalar(1));
  table.set("xi", dxi);
  CHECK(d_squared_check(table).ok());

  auto d = standard_model(kF);
  auto s = make_su3_structure(d.omega, d.up, d.um, FrameMetric::identity(cf6));
  const SUTorsion tor = su3_torsion(s, base_table);
  REQUIRE(tor.T_omega.has_value());
  const Form T7 = Form::mapped_generators(*tor.T_omega, f_embed, cf7);

  auto ps = ParamSetBuilder().free_param("r").build();
  const auto algebra =
      make_gauge_algebra({"Y1"}, {{{Scalar::zero(ps)}}}, {{Scalar::param(ps, "r")}});
  const GaugeField gf = make_gauge_field(algebra, {Form::generator(cf7, "xi")}, table);
  REQUIRE(gf.curvature.size() == 1);
  CHECK(gf.curvature[0] == dxi);

  // d T = 0, so the residual is -r (f13 + f24)^2 = 2 r f1234.
  const Form residual = su3_bianchi_residual(T7, gf, table);
  CHECK(residual ==
        Form::term(cf7, {"f1", "f2", "f3", "f4"}, Scalar::param(ps, "r") * Scalar(2)));
}
