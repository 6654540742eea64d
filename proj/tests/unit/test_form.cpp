#include <doctest.h>

#include "g2calc/difftable.hpp"
#include "g2calc/error.hpp"
#include "g2calc/form.hpp"

using namespace g2calc;

namespace {

std::shared_ptr<const Coframe> cf5() {
  return Coframe::pure({"e1", "e2", "e3", "e4", "e5"});
}

Form gen(const std::shared_ptr<const Coframe>& cf, const std::string& n) {
  return Form::generator(cf, n);
}

}  // namespace

TEST_CASE("wedge product signs") {
  auto cf = cf5();
  const Form e1 = gen(cf, "e1");
  const Form e2 = gen(cf, "e2");
  const Form e3 = gen(cf, "e3");
  CHECK(Form::wedge_pure(e1, e2) == Form::term(cf, {"e1", "e2"}, Scalar(1)));
  CHECK(Form::wedge_pure(e2, e1) == Form::term(cf, {"e1", "e2"}, Scalar(-1)));
  CHECK(Form::wedge_pure(e1, e1).is_zero());
  const Form e12 = Form::wedge_pure(e1, e2);
  CHECK(Form::wedge_pure(e12, e3) == Form::wedge_pure(e1, Form::wedge_pure(e2, e3)));
  // 1-forms anticommute, 2-forms commute with everything of even degree.
  const Form e23 = Form::wedge_pure(e2, e3);
  const Form e45 = Form::term(cf, {"e4", "e5"}, Scalar(1));
  CHECK(Form::wedge_pure(e23, e45) == Form::wedge_pure(e45, e23));
}

TEST_CASE("term constructor normalises order") {
  auto cf = cf5();
  CHECK(Form::term(cf, {"e2", "e1"}, Scalar(1)) == Form::term(cf, {"e1", "e2"}, Scalar(-1)));
  CHECK(Form::term(cf, {"e3", "e1", "e2"}, Scalar(1)) ==
        Form::term(cf, {"e1", "e2", "e3"}, Scalar(1)));
  CHECK(Form::term(cf, {"e1", "e1"}, Scalar(1)).is_zero());
}

TEST_CASE("coefficient extraction follows orientation") {
  auto cf = cf5();
  const Form f = Form::term(cf, {"e1", "e2"}, Scalar(Rational(3)));
  CHECK(f.coefficient({"e1", "e2"}) == Scalar(Rational(3)));
  CHECK(f.coefficient({"e2", "e1"}) == Scalar(Rational(-3)));
  CHECK(f.coefficient({"e1", "e3"}).is_zero());
}

TEST_CASE("contraction is an antiderivation") {
  auto cf = cf5();
  const Form e123 = Form::term(cf, {"e1", "e2", "e3"}, Scalar(1));
  CHECK(e123.contracted("e1") == Form::term(cf, {"e2", "e3"}, Scalar(1)));
  CHECK(e123.contracted("e2") == Form::term(cf, {"e1", "e3"}, Scalar(-1)));
  CHECK(e123.contracted("e3") == Form::term(cf, {"e1", "e2"}, Scalar(1)));
  CHECK(e123.contracted("e4").is_zero());

  const Form a = Form::term(cf, {"e1", "e2"}, Scalar(Rational(2))) +
                 Form::term(cf, {"e3", "e4"}, Scalar(Rational(-1)));
  const Form b = gen(cf, "e5") + gen(cf, "e1");
  const Form lhs = Form::wedge_pure(a, b).contracted("e1");
  const Form rhs = Form::wedge_pure(a.contracted("e1"), b) + Form::wedge_pure(a, b.contracted("e1"));
  CHECK(lhs == rhs);  // deg(a) = 2, so the sign in the Leibniz rule is +1
}

TEST_CASE("mixed degree sums are handled termwise") {
  auto cf = cf5();
  Form f = gen(cf, "e1") + Form::term(cf, {"e2", "e3"}, Scalar(1));
  CHECK(!f.homogeneous_degree().has_value());
  CHECK(Form::term(cf, {"e2", "e3"}, Scalar(1)).homogeneous_degree() == 2);
  CHECK(f.coefficient({"e2", "e3"}) == Scalar(1));
}

TEST_CASE("exterior derivative via a differential table") {
  auto cf = cf5();
  DiffTable table(cf);
  const Form zero(cf);
  table.set("e1", zero);
  table.set("e2", zero);
  table.set("e3", zero);
  table.set("e4", zero);
  table.set("e5", Form::term(cf, {"e1", "e2"}, Scalar(1)));

  // Leibniz: d(e3 ^ e5) = -e3 ^ d(e5) = -e3 ^ e12 = -e123.
  const Form e35 = Form::term(cf, {"e3", "e5"}, Scalar(1));
  CHECK(dform(table, e35) == Form::term(cf, {"e1", "e2", "e3"}, Scalar(-1)));
  // Parameters are constants.
  auto ps = ParamSetBuilder().free_param("t").build();
  const Form tf = Form::term(cf, {"e5"}, Scalar::param(ps, "t"));
  CHECK(dform(table, tf) == Form::term(cf, {"e1", "e2"}, Scalar::param(ps, "t")));
  CHECK(dform(table, Form::from_scalar(cf, Scalar::param(ps, "t"))).is_zero());

  DiffTable partial(cf);
  partial.set("e5", Form::term(cf, {"e1", "e2"}, Scalar(1)));
  CHECK_THROWS_AS(dform(partial, e35), Error);
}

TEST_CASE("d-squared check reports failures and skips") {
  auto cf = cf5();
  DiffTable table(cf);
  const Form zero(cf);
  table.set("e1", zero);
  table.set("e3", zero);
  table.set("e4", zero);
  table.set("e2", Form::term(cf, {"e3", "e4"}, Scalar(1)));
  table.set("e5", Form::term(cf, {"e1", "e2"}, Scalar(1)));
  // d(d e5) = d(e12) = -e1 ^ e34 = -e134.
  const auto report = d_squared_check(table);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->generator == "e5");
  CHECK(report.failure->residual == Form::term(cf, {"e1", "e3", "e4"}, Scalar(-1)));

  DiffTable incomplete(cf);
  incomplete.set("e5", Form::term(cf, {"e1", "e2"}, Scalar(1)));
  incomplete.set("e1", zero);
  const auto rep2 = d_squared_check(incomplete);
  CHECK(rep2.ok());
  // e5 needs d(e2), which is unavailable, so it is skipped.
  CHECK(std::count(rep2.skipped.begin(), rep2.skipped.end(), "e5") == 1);
  CHECK(std::count(rep2.checked.begin(), rep2.checked.end(), "e1") == 1);
}

TEST_CASE("mapped generators extend linearly and multiplicatively") {
  auto cf = cf5();
  auto target = Coframe::pure({"f1", "f2", "f3"});
  const std::map<std::string, Form> images = {
      {"e1", Form::generator(target, "f2")},
      {"e2", Form::generator(target, "f1") + Form::generator(target, "f3")},
  };
  const Form e12 = Form::term(cf, {"e1", "e2"}, Scalar(1));
  // f2 ^ (f1 + f3) = -f12 + f23.
  CHECK(Form::mapped_generators(e12, images, target) ==
        Form::term(target, {"f1", "f2"}, Scalar(-1)) +
            Form::term(target, {"f2", "f3"}, Scalar(1)));
  // Degree-0 terms pass through; coefficients are preserved.
  const Form mixed = Form::from_scalar(cf, Scalar(7)) + e12.scaled(Rational(1, 2));
  const Form image = Form::mapped_generators(mixed, images, target);
  CHECK(image.coefficient({}) == Scalar(7));
  CHECK(image.coefficient({"f1", "f2"}) == Scalar(Rational(-1, 2)));
  // A generator without an image is an error.
  CHECK_THROWS_AS(Form::mapped_generators(Form::generator(cf, "e3"), images, target), Error);
  // Images may collapse: e1 -> f2, e2 -> f2 kills e12.
  const std::map<std::string, Form> collapse = {
      {"e1", Form::generator(target, "f2")},
      {"e2", Form::generator(target, "f2")},
  };
  CHECK(Form::mapped_generators(e12, collapse, target).is_zero());
}

TEST_CASE("printing") {
  auto cf = cf5();
  auto ps = ParamSetBuilder().free_param("t").build();
  CHECK(Form(cf).str() == "0");
  const Form f = Form::term(cf, {"e1", "e2"}, Scalar(Rational(3, 2))) -
                 Form::term(cf, {"e3"}, Scalar(1)) +
                 Form::term(cf, {"e4", "e5"}, Scalar::param(ps, "t") + Scalar(1));
  CHECK(f.str() == "3/2*e1^e2 - e3 + (1 + t)*e4^e5");
}
