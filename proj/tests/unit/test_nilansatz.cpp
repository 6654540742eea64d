#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <vector>

#include "g2calc/error.hpp"
#include "g2calc/nilansatz.hpp"

using namespace g2calc;

namespace {

using Mat3 = std::vector<std::vector<Scalar>>;

Mat3 identity3(const std::shared_ptr<const ParamSet>& ps) {
  const Scalar z = Scalar::zero(ps);
  const Scalar one = Scalar::constant(ps, Rational(1));
  return {{one, z, z}, {z, one, z}, {z, z, one}};
}

Mat3 diagonal3(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Scalar z;
  return {{a, z, z}, {z, b, z}, {z, z, c}};
}

Mat3 scaled3(Mat3 m, const Rational& r) {
  for (auto& row : m)
    for (auto& entry : row) entry = entry.scaled(r);
  return m;
}

Form term(const std::shared_ptr<const Coframe>& cf, const std::vector<std::string>& names,
          Scalar coeff) {
  return Form::term(cf, names, std::move(coeff));
}

void check_pairing(const PairingSolution& sol, const std::array<Rational, 3>& eps, int want_pos) {
  REQUIRE(sol.possible);
  Rational lhs;
  Rational rhs;
  int pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    lhs += sol.diag[i] * eps[i] * eps[i];
    rhs += eps[i] * eps[i];
    if (!sol.diag[i].is_negative() && !sol.diag[i].is_zero()) ++pos;
    CHECK(!sol.diag[i].is_zero());
  }
  CHECK(lhs == rhs);
  CHECK(pos == want_pos);
}

}  // namespace

TEST_CASE("rotated frames give the same definite three-form data") {
  auto ps = ParamSetBuilder().free_param("dl").free_param("m1").free_param("m2").build();
  const Scalar dl = Scalar::param(ps, "dl");
  const std::array<Scalar, 3> eps = {Scalar::param(ps, "m1"), Scalar::param(ps, "m2"),
                                     Scalar::zero(ps)};
  const Mat3 id = identity3(ps);
  const Mat3 c0 = diagonal3(dl.scaled(-2), dl.scaled(-2), dl.scaled(-2));

  SUBCASE("identity frame") {
    const NilScenario sc = standard_nil_scenario(dl, eps, id, c0, id);
    const NilBuild nb = build_phi(sc);
    const auto cf = nb.algebra->coframe();
    CHECK(nb.structure.metric().is_identity());
    Form want = term(cf, {"e5", "e6", "e7"}, Scalar(1));
    want += Form::wedge_pure(sigma_plus(cf, 1), Form::generator(cf, "e5"));
    want += Form::wedge_pure(sigma_plus(cf, 2), Form::generator(cf, "e6"));
    want += Form::wedge_pure(sigma_plus(cf, 3), Form::generator(cf, "e7"));
    CHECK(nb.structure.phi() == want);
    CHECK(nb.structure.volume() == term(cf, {"e1", "e2", "e3", "e4", "e5", "e6", "e7"}, Scalar(1)));
  }

  SUBCASE("reflection-free diagonal frame") {
    const Mat3 b = diagonal3(Scalar(1), Scalar(-1), Scalar(-1));
    const NilScenario sc = standard_nil_scenario(dl, eps, b, c0, id);
    const NilBuild nb = build_phi(sc);
    const auto cf = nb.algebra->coframe();
    Form want = term(cf, {"e5", "e6", "e7"}, Scalar(1));
    want += Form::wedge_pure(sigma_plus(cf, 1), Form::generator(cf, "e5"));
    want -= Form::wedge_pure(sigma_plus(cf, 2), Form::generator(cf, "e6"));
    want -= Form::wedge_pure(sigma_plus(cf, 3), Form::generator(cf, "e7"));
    CHECK(nb.structure.phi() == want);
  }

  SUBCASE("rational rotation frame") {
    const Mat3 b = rotation_from_quaternion(ps, 1, 2, 3, 4);
    const NilScenario sc = standard_nil_scenario(dl, eps, b, c0, id);
    const NilBuild nb = build_phi(sc);
    CHECK(nb.structure.metric().is_identity());
  }

  SUBCASE("invalid frames are rejected") {
    Mat3 shear = identity3(ps);
    shear[0][1] = Scalar(1);
    CHECK_THROWS_AS(standard_nil_scenario(dl, eps, shear, c0, id), Error);
    const Mat3 reflection = diagonal3(Scalar(1), Scalar(1), Scalar(-1));
    CHECK_THROWS_AS(standard_nil_scenario(dl, eps, reflection, c0, id), Error);
    CHECK_THROWS_AS(rotation_from_quaternion(ps, 0, 0, 0, 0), Error);
  }
}

TEST_CASE("matrix and wedge readings of the instanton condition agree") {
  auto ps = ParamSetBuilder()
                .free_param("dl")
                .free_param("m1")
                .free_param("m2")
                .free_param("m3")
                .build();
  const Scalar dl = Scalar::param(ps, "dl");
  const std::array<Scalar, 3> eps = {Scalar::param(ps, "m1"), Scalar::param(ps, "m2"),
                                     Scalar::param(ps, "m3")};
  const Mat3 id = identity3(ps);

  SUBCASE("spherical bracket matrix on the identity frame") {
    const Mat3 c = diagonal3(dl.scaled(-2), dl.scaled(-2), dl.scaled(-2));
    const NilScenario sc = standard_nil_scenario(dl, eps, id, c, id);
    const InstantonVerdict v = instanton_equivalence(sc);
    CHECK(v.matrix_condition);
    CHECK(v.wedge_condition);
    CHECK(v.consistent());
    const CoclosedReport r = coclosed_consequence(sc);
    CHECK(r.instanton);
    CHECK(r.coclosed);
  }

  SUBCASE("hyperbolic bracket matrix on the reflected frame") {
    const Mat3 b = diagonal3(Scalar(1), Scalar(-1), Scalar(-1));
    const Mat3 c = diagonal3(dl.scaled(-2), dl.scaled(2), dl.scaled(2));
    const NilScenario sc = standard_nil_scenario(dl, eps, b, c, id);
    const InstantonVerdict v = instanton_equivalence(sc);
    CHECK(v.matrix_condition);
    CHECK(v.wedge_condition);
    const CoclosedReport r = coclosed_consequence(sc);
    CHECK(r.instanton);
    CHECK(r.coclosed);
  }

  SUBCASE("flat connection fails against a nonabelian structure") {
    const Mat3 z = scaled3(identity3(ps), Rational(0));
    const NilScenario sc = standard_nil_scenario(dl, eps, identity3(ps), z, id);
    const InstantonVerdict v = instanton_equivalence(sc);
    CHECK(!v.matrix_condition);
    CHECK(!v.wedge_condition);
    CHECK(v.consistent());
    const NilBuild nb = build_phi(sc);
    const auto failure = g2_instanton_check(
        {nb.algebra->d(Form::generator(nb.algebra->coframe(), "e5"))}, nb.structure);
    REQUIRE(failure.has_value());
    CHECK(failure->residual ==
          term(nb.algebra->coframe(), {"e1", "e2", "e3", "e4", "e6", "e7"}, dl.scaled(2)));
  }

  SUBCASE("random rotations with the bracket matrix the instanton forces") {
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<long long> pick(-6, 6);
    int tested = 0;
    while (tested < 25) {
      const long long w = pick(rng);
      const long long x = pick(rng);
      const long long y = pick(rng);
      const long long z = pick(rng);
      if (w == 0 && x == 0 && y == 0 && z == 0) continue;
      ++tested;
      const Mat3 b = rotation_from_quaternion(ps, w, x, y, z);
      // a_plus = dl * b^T makes c := -2 a_plus b = -2 dl Id diagonal.
      Mat3 a_plus(3, std::vector<Scalar>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a_plus[i][j] = dl * b[j][i];
      const Mat3 a_minus = diagonal3(eps[0], eps[1], eps[2]);
      const NilScenario sc =
          make_nil_scenario(a_plus, a_minus, b, diagonal3(dl.scaled(-2), dl.scaled(-2),
                                                          dl.scaled(-2)),
                            id);
      const InstantonVerdict v = instanton_equivalence(sc);
      CHECK(v.matrix_condition);
      CHECK(v.wedge_condition);
      const CoclosedReport r = coclosed_consequence(sc);
      CHECK(r.instanton);
      CHECK(r.coclosed);
    }
  }

  SUBCASE("a non-symmetric bracket matrix passes the wedge test but spoils coclosure") {
    const Mat3 b = rotation_from_quaternion(ps, 1, 1, 0, 0);
    Mat3 c = scaled3(b, Rational(-2));
    for (auto& row : c)
      for (auto& entry : row) entry = entry * dl;
    const NilScenario sc = standard_nil_scenario(dl, eps, b, c, id);
    const CoclosedReport r = coclosed_consequence(sc);
    CHECK(r.instanton);
    CHECK(!r.coclosed);
    CHECK(r.dpsi.homogeneous_degree() == 5);
  }
}

TEST_CASE("bianchi defect of the diagonal family") {
  auto ps = ParamSetBuilder()
                .free_param("dl")
                .free_param("m1")
                .free_param("m2")
                .free_param("m3")
                .free_param("al")
                .sign_param("a")
                .sign_param("g")
                .build();
  const Scalar dl = Scalar::param(ps, "dl");
  const std::array<Scalar, 3> eps = {Scalar::param(ps, "m1"), Scalar::param(ps, "m2"),
                                     Scalar::param(ps, "m3")};
  const Scalar a = Scalar::param(ps, "a");
  const Scalar g = Scalar::param(ps, "g");
  const Scalar al = Scalar::param(ps, "al");
  const Scalar one(1);

  const Mat3 b = diagonal3(one, a, a);
  const Mat3 c = diagonal3(dl.scaled(-2), (dl * a).scaled(-2), (dl * a).scaled(-2));
  const Mat3 pairing = diagonal3(al * g, al, al);
  const NilScenario sc = standard_nil_scenario(dl, eps, b, c, pairing);
  const Form residual = bianchi_catalog(sc);
  const auto cf = nil_coframe();

  SUBCASE("full symbolic defect") {
    const Scalar d2 = dl * dl;
    const Scalar s1 = eps[0] * eps[0];
    const Scalar s2 = eps[1] * eps[1];
    const Scalar s3 = eps[2] * eps[2];
    const Scalar top = (d2 * (a.scaled(8) + one - al * (g + Scalar(2)).scaled(3)))
                           .scaled(Rational(2, 3)) -
                       (s1 * (one - g * al)).scaled(2) - ((s2 + s3) * (one - al)).scaled(2);
    const Scalar block1 = a.scaled(2) + one - (al * g).scaled(3);
    const Scalar block2 = a.scaled(2) + one - (al * a).scaled(3);
    Form want = term(cf, {"e1", "e2", "e3", "e4"}, top);
    want += term(cf, {"e1", "e3", "e6", "e7"},
                 (dl * block1 * (dl + eps[0])).scaled(Rational(-4, 3)));
    want += term(cf, {"e2", "e4", "e6", "e7"},
                 (dl * block1 * (eps[0] - dl)).scaled(Rational(-4, 3)));
    want += term(cf, {"e1", "e4", "e7", "e5"},
                 (dl * block2 * (eps[1] - dl)).scaled(Rational(-4, 3)));
    want += term(cf, {"e2", "e3", "e7", "e5"},
                 (dl * block2 * (-dl - eps[1])).scaled(Rational(-4, 3)));
    want += term(cf, {"e1", "e2", "e5", "e6"},
                 (dl * block2 * (dl + eps[2])).scaled(Rational(-4, 3)));
    want += term(cf, {"e3", "e4", "e5", "e6"},
                 (dl * block2 * (dl - eps[2])).scaled(Rational(-4, 3)));
    CHECK(residual == want);
  }

  SUBCASE("the spherical unit pairing closes the identity") {
    const Form zero =
        residual.substituted({{"a", Rational(1)}, {"g", Rational(1)}, {"al", Rational(1)}});
    CHECK(zero.is_zero());
  }

  SUBCASE("the hyperbolic branch leaves a top-form defect") {
    const Form left = residual.substituted(
        {{"a", Rational(-1)}, {"g", Rational(-1)}, {"al", Rational(1, 3)}});
    const Scalar coeff = ((dl * dl).scaled(4) + (eps[0] * eps[0]).scaled(2) + eps[1] * eps[1] +
                          eps[2] * eps[2])
                             .scaled(Rational(-4, 3));
    CHECK(left == term(cf, {"e1", "e2", "e3", "e4"}, coeff));
  }

  SUBCASE("aligned pairing scale collapses the defect to the top form") {
    // gamma = a and alpha = (2a+1)/(3a) = (2+a)a^2/3 ... = a(2a+1)/3, entries
    // stay polynomial because a^2 = 1.
    const Scalar alpha = (a * (a.scaled(2) + one)).scaled(Rational(1, 3));
    const Mat3 aligned = diagonal3(alpha * a, alpha, alpha);
    const NilScenario sc2 = standard_nil_scenario(dl, eps, b, c, aligned);
    const Form collapsed = bianchi_catalog(sc2);
    const Scalar coeff = (a - one) * ((dl * dl).scaled(Rational(8, 3)) +
                                      (eps[0] * eps[0]).scaled(Rational(4, 3)) +
                                      (eps[1] * eps[1] + eps[2] * eps[2]).scaled(Rational(2, 3)));
    CHECK(collapsed == term(cf, {"e1", "e2", "e3", "e4"}, coeff));
  }

  SUBCASE("only the spherical branch admits a closing pairing scale") {
    for (const int av : {1, -1}) {
      for (const int gv : {1, -1}) {
        auto ps2 = ParamSetBuilder()
                       .free_param("dl")
                       .free_param("m1")
                       .free_param("m2")
                       .free_param("m3")
                       .free_param("al")
                       .build();
        const Scalar dl2 = Scalar::param(ps2, "dl");
        const Scalar al2 = Scalar::param(ps2, "al");
        const std::array<Scalar, 3> eps2 = {Scalar::param(ps2, "m1"), Scalar::param(ps2, "m2"),
                                            Scalar::param(ps2, "m3")};
        const Scalar one2 = Scalar::constant(ps2, Rational(1));
        const Mat3 b2 = diagonal3(one2, one2.scaled(av), one2.scaled(av));
        const Mat3 c2 = diagonal3(dl2.scaled(-2), dl2.scaled(-2 * av), dl2.scaled(-2 * av));
        const Mat3 pairing2 = diagonal3(al2.scaled(gv), al2, al2);
        const Form defect =
            bianchi_catalog(standard_nil_scenario(dl2, eps2, b2, c2, pairing2));
        const auto eqs = equations_from_form(defect, {"al"});
        const SolveResult sol = solve_linear_system(eqs);
        if (av == 1 && gv == 1) {
          REQUIRE(sol.status == SolveStatus::Unique);
          CHECK((sol.solution.at("al") - one2).is_zero());
        } else {
          CHECK(sol.status == SolveStatus::Inconsistent);
        }
      }
    }
  }
}

TEST_CASE("general symmetric pairings recovered by sampling") {
  auto ps = ParamSetBuilder()
                .free_param("dl")
                .free_param("m1")
                .free_param("m2")
                .free_param("m3")
                .build();
  const Scalar dl = Scalar::param(ps, "dl");
  const std::array<Scalar, 3> eps = {Scalar::param(ps, "m1"), Scalar::param(ps, "m2"),
                                     Scalar::param(ps, "m3")};
  const Mat3 id = identity3(ps);

  SUBCASE("spherical branch forces the unit pairing") {
    const Mat3 c = diagonal3(dl.scaled(-2), dl.scaled(-2), dl.scaled(-2));
    const SolveResult sol =
        solve_general_pairing(standard_nil_scenario(dl, eps, id, c, id));
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK((sol.solution.at("p11") - Scalar(1)).is_zero());
    CHECK((sol.solution.at("p22") - Scalar(1)).is_zero());
    CHECK((sol.solution.at("p33") - Scalar(1)).is_zero());
    CHECK(sol.solution.at("p12").is_zero());
    CHECK(sol.solution.at("p13").is_zero());
    CHECK(sol.solution.at("p23").is_zero());
  }

  SUBCASE("hyperbolic branch admits no pairing at all") {
    const Mat3 b = diagonal3(Scalar(1), Scalar(-1), Scalar(-1));
    const Mat3 c = diagonal3(dl.scaled(-2), dl.scaled(2), dl.scaled(2));
    const SolveResult sol =
        solve_general_pairing(standard_nil_scenario(dl, eps, b, c, id));
    CHECK(sol.status == SolveStatus::Inconsistent);
  }

  SUBCASE("abelian branch fixes the diagonal and leaves cross terms free") {
    const Mat3 z = scaled3(identity3(ps), Rational(0));
    const SolveResult sol =
        solve_general_pairing(standard_nil_scenario(Scalar::zero(ps), eps, id, z, id));
    REQUIRE(sol.status == SolveStatus::Underdetermined);
    CHECK((sol.solution.at("p11") - Scalar(1)).is_zero());
    CHECK((sol.solution.at("p22") - Scalar(1)).is_zero());
    CHECK((sol.solution.at("p33") - Scalar(1)).is_zero());
    const std::set<std::string> frees(sol.free_unknowns.begin(), sol.free_unknowns.end());
    CHECK(frees.count("p12") == 1);
    CHECK(frees.count("p13") == 1);
    CHECK(frees.count("p23") == 1);
  }
}

TEST_CASE("diagonal pairings for the torus fibrations by signature") {
  auto ps = ParamSetBuilder().free_param("u").build();

  SUBCASE("single twist") {
    const std::array<Scalar, 3> eps = {Scalar(1), Scalar(0), Scalar(0)};
    const std::array<Rational, 3> nums = {Rational(1), Rational(0), Rational(0)};
    check_pairing(solve_abelian_pairing(eps, PairingSignature::PositiveDefinite), nums, 3);
    check_pairing(solve_abelian_pairing(eps, PairingSignature::Mixed21), nums, 2);
    check_pairing(solve_abelian_pairing(eps, PairingSignature::Mixed12), nums, 1);
    const PairingSolution neg = solve_abelian_pairing(eps, PairingSignature::NegativeDefinite);
    CHECK(!neg.possible);
    CHECK(neg.note.find("impossible") != std::string::npos);
  }

  SUBCASE("generic twists") {
    const std::array<Scalar, 3> eps = {Scalar(Rational(3, 2)), Scalar(-2), Scalar(5)};
    const std::array<Rational, 3> nums = {Rational(3, 2), Rational(-2), Rational(5)};
    check_pairing(solve_abelian_pairing(eps, PairingSignature::PositiveDefinite), nums, 3);
    check_pairing(solve_abelian_pairing(eps, PairingSignature::Mixed21), nums, 2);
    check_pairing(solve_abelian_pairing(eps, PairingSignature::Mixed12), nums, 1);
    CHECK(!solve_abelian_pairing(eps, PairingSignature::NegativeDefinite).possible);
  }

  SUBCASE("flat model accepts anything") {
    const std::array<Scalar, 3> eps = {Scalar(0), Scalar(0), Scalar(0)};
    const PairingSolution sol =
        solve_abelian_pairing(eps, PairingSignature::NegativeDefinite);
    CHECK(sol.possible);
    CHECK(sol.note.find("flat") != std::string::npos);
    for (const auto& d : sol.diag) CHECK(d == Rational(-1));
  }

  SUBCASE("symbolic eps is rejected") {
    const std::array<Scalar, 3> eps = {Scalar::param(ps, "u"), Scalar(0), Scalar(0)};
    CHECK_THROWS_AS(solve_abelian_pairing(eps, PairingSignature::PositiveDefinite), Error);
  }
}

TEST_CASE("abelian extension closes the hyperbolic branch") {
  auto ps = ParamSetBuilder()
                .free_param("dl")
                .free_param("m1")
                .free_param("m2")
                .free_param("m3")
                .build();
  const Scalar dl = Scalar::param(ps, "dl");
  const std::array<Scalar, 3> eps = {Scalar::param(ps, "m1"), Scalar::param(ps, "m2"),
                                     Scalar::param(ps, "m3")};
  const Mat3 b = diagonal3(Scalar(1), Scalar(-1), Scalar(-1));
  const Mat3 c = diagonal3(dl.scaled(-2), dl.scaled(2), dl.scaled(2));
  const Mat3 pairing = diagonal3(Scalar(Rational(-1, 3)), Scalar(Rational(1, 3)),
                                 Scalar(Rational(1, 3)));
  const NilScenario sc = standard_nil_scenario(dl, eps, b, c, pairing);

  SUBCASE("residual vanishes identically") {
    const SlSupplement sup = sl2_supplement(sc);
    CHECK(sup.residual.is_zero());
    const Scalar want = (dl * dl).scaled(Rational(8, 3)) +
                        (eps[0] * eps[0]).scaled(Rational(4, 3)) +
                        (eps[1] * eps[1]).scaled(Rational(2, 3)) +
                        (eps[2] * eps[2]).scaled(Rational(2, 3));
    CHECK((sup.y0_norm - want).is_zero());
    CHECK(sup.y0_norm.substituted({{"dl", Rational(1)},
                                   {"m1", Rational(0)},
                                   {"m2", Rational(0)},
                                   {"m3", Rational(0)}}) == Scalar::constant(ps, Rational(8, 3)));
    // The abelian curvature is the anti-self-dual seed, an instanton whose
    // square is the top form on the base directions.
    const Form f0 = sup.field.curvature.at(0);
    CHECK(f0 == sigma_minus(sup.coframe, 1));
    CHECK(Form::wedge_pure(f0, f0) ==
          term(sup.coframe, {"e1", "e2", "e3", "e4"}, Scalar(-2)));
  }

  SUBCASE("without the extension the defect persists") {
    const Form defect = bianchi_catalog(sc);
    const Scalar coeff = ((dl * dl).scaled(4) + (eps[0] * eps[0]).scaled(2) + eps[1] * eps[1] +
                          eps[2] * eps[2])
                             .scaled(Rational(-4, 3));
    CHECK(defect == term(nil_coframe(), {"e1", "e2", "e3", "e4"}, coeff));
  }

  SUBCASE("other branches are rejected") {
    const NilScenario wrong = standard_nil_scenario(
        dl, eps, identity3(ps), diagonal3(dl.scaled(-2), dl.scaled(-2), dl.scaled(-2)),
        pairing);
    CHECK_THROWS_AS(sl2_supplement(wrong), Error);
  }
}
