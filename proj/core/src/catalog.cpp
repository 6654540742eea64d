#include "g2calc/catalog.hpp"

#include <utility>

#include "g2calc/error.hpp"
#include "g2calc/param.hpp"

namespace g2calc {

namespace {

Form pair_sum(const std::shared_ptr<const Coframe>& cf, const std::string& a, const std::string& b,
              const std::string& c, const std::string& d, int sign_first, int sign_second) {
  Form f = Form::term(cf, {a, b}, Scalar(sign_first));
  f += Form::term(cf, {c, d}, Scalar(sign_second));
  return f;
}

}  // namespace

Form sigma_plus(const std::shared_ptr<const Coframe>& cf, int i) {
  switch (i) {
    case 1:
      return pair_sum(cf, "e1", "e3", "e2", "e4", 1, -1);
    case 2:
      return pair_sum(cf, "e1", "e4", "e2", "e3", -1, -1);
    case 3:
      return pair_sum(cf, "e1", "e2", "e3", "e4", 1, 1);
    default:
      fail("sigma_plus index must be 1, 2 or 3");
  }
}

Form sigma_minus(const std::shared_ptr<const Coframe>& cf, int i) {
  switch (i) {
    case 1:
      return pair_sum(cf, "e1", "e3", "e2", "e4", 1, 1);
    case 2:
      return pair_sum(cf, "e1", "e4", "e2", "e3", 1, -1);
    case 3:
      return pair_sum(cf, "e1", "e2", "e3", "e4", 1, -1);
    default:
      fail("sigma_minus index must be 1, 2 or 3");
  }
}

std::shared_ptr<const Coframe> sasakian_coframe(bool with_connection) {
  std::vector<std::string> names = {"e1",  "e2",  "e3",  "e4",  "e5",  "e6",  "e7",
                                    "w1p", "w2p", "w3p", "w1m", "w2m", "w3m", "nu4"};
  std::vector<int> degrees = {1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 4};
  if (with_connection) {
    names.push_back("xiFS");
    degrees.push_back(1);
  }
  return Coframe::graded(std::move(names), std::move(degrees));
}

DiffTable sasakian_table(const std::shared_ptr<const Coframe>& cf) {
  DiffTable table(cf);
  auto t2 = [&](const std::string& a, const std::string& b, int s) {
    return Form::term(cf, {a, b}, Scalar(2 * s));
  };
  table.set("e5", t2("e6", "e7", 1) + Form::generator(cf, "w1p").scaled(Rational(2)));
  table.set("e6", t2("e7", "e5", 1) + Form::generator(cf, "w2p").scaled(Rational(2)));
  table.set("e7", t2("e5", "e6", 1) + Form::generator(cf, "w3p").scaled(Rational(2)));
  table.set("w1p", t2("e6", "w3p", 1) + t2("e7", "w2p", -1));
  table.set("w2p", t2("e7", "w1p", 1) + t2("e5", "w3p", -1));
  table.set("w3p", t2("e5", "w2p", 1) + t2("e6", "w1p", -1));
  table.set("nu4", Form::zero(cf));
  if (cf->index_of("xiFS") >= 0) table.set("xiFS", Form::generator(cf, "w1m"));
  return table;
}

DiffTable build_ansatz_table(const std::shared_ptr<const Coframe>& cf,
                             const std::vector<std::vector<Scalar>>& plus,
                             const std::vector<std::vector<Scalar>>& minus) {
  if (plus.size() != 3 || minus.size() != 3) fail("structure matrices must be 3x3");
  DiffTable table(cf);
  for (const auto& low : {"e1", "e2", "e3", "e4"}) table.set(low, Form::zero(cf));
  for (int i = 0; i < 3; ++i) {
    if (plus[i].size() != 3 || minus[i].size() != 3) fail("structure matrices must be 3x3");
    Form d = Form::zero(cf);
    for (int j = 0; j < 3; ++j) {
      d += sigma_plus(cf, j + 1).scaled(plus[i][j]);
      d += sigma_minus(cf, j + 1).scaled(minus[i][j]);
    }
    table.set("e" + std::to_string(5 + i), std::move(d));
  }
  return table;
}

DiffTable build_ansatz_table(const std::shared_ptr<const Coframe>& cf, const Scalar& delta,
                             const std::array<Scalar, 3>& eps) {
  const Scalar z;
  std::vector<std::vector<Scalar>> plus = {{delta, z, z}, {z, delta, z}, {z, z, delta}};
  std::vector<std::vector<Scalar>> minus = {{eps[0], z, z}, {z, eps[1], z}, {z, z, eps[2]}};
  return build_ansatz_table(cf, plus, minus);
}

void rationality_check(const DiffTable& table) {
  const auto& cf = table.coframe();
  for (std::size_t i = 0; i < cf->size(); ++i) {
    const auto& gen = cf->name(i);
    if (!table.has(gen)) continue;
    for (const auto& [m, c] : table.at(gen).terms()) {
      (void)m;
      if (!c.as_constant().has_value())
        fail("differential of '" + gen + "' has a non-rational coefficient");
    }
  }
}

namespace {

AlgebraEntry make_pure7(const std::string& name, const std::string& description,
                        const std::vector<std::pair<std::string, std::vector<std::pair<int, std::vector<std::string>>>>>& diffs) {
  auto cf = Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  DiffTable table(cf);
  for (std::size_t i = 0; i < cf->size(); ++i) table.set(cf->name(i), Form::zero(cf));
  for (const auto& [gen, sum] : diffs) {
    Form d = Form::zero(cf);
    for (const auto& [coeff, names] : sum) d += Form::term(cf, names, Scalar(coeff));
    table.set(gen, std::move(d));
  }
  return AlgebraEntry{name, 7, cf, std::move(table), description};
}

std::vector<AlgebraEntry> make_catalog() {
  std::vector<AlgebraEntry> entries;

  entries.push_back(make_pure7("R7", "abelian: every generator is closed", {}));

  entries.push_back(make_pure7("R2_h5", "two-step nilpotent with one-dimensional derived algebra",
                               {{"e5", {{1, {"e1", "e2"}}, {1, {"e3", "e4"}}}}}));

  entries.push_back(
      make_pure7("R_h3C", "two-step nilpotent, complex Heisenberg times a line",
                 {{"e5", {{1, {"e1", "e2"}}, {-1, {"e3", "e4"}}}},
                  {"e6", {{1, {"e1", "e3"}}, {1, {"e2", "e4"}}}}}));

  entries.push_back(
      make_pure7("hH", "two-step nilpotent, quaternionic Heisenberg algebra",
                 {{"e5", {{1, {"e1", "e2"}}, {-1, {"e3", "e4"}}}},
                  {"e6", {{1, {"e1", "e3"}}, {1, {"e2", "e4"}}}},
                  {"e7", {{1, {"e1", "e4"}}, {-1, {"e2", "e3"}}}}}));

  entries.push_back(make_pure7("R_n32", "two-step nilpotent, free algebra on three generators times a line",
                               {{"e5", {{1, {"e1", "e2"}}}},
                                {"e6", {{1, {"e1", "e3"}}}},
                                {"e7", {{1, {"e2", "e3"}}}}}));

  entries.push_back(make_pure7("n73A", "two-step nilpotent with three-dimensional derived algebra, type A",
                               {{"e5", {{1, {"e1", "e2"}}}},
                                {"e6", {{1, {"e2", "e3"}}}},
                                {"e7", {{1, {"e2", "e4"}}}}}));

  entries.push_back(make_pure7("n73B1", "two-step nilpotent with three-dimensional derived algebra, type B",
                               {{"e5", {{1, {"e1", "e3"}}, {1, {"e2", "e3"}}}},
                                {"e6", {{1, {"e1", "e2"}}, {-1, {"e3", "e4"}}}},
                                {"e7", {{1, {"e1", "e4"}}}}}));

  entries.push_back(make_pure7("n73C", "two-step nilpotent with three-dimensional derived algebra, type C",
                               {{"e5", {{1, {"e1", "e2"}}, {1, {"e3", "e4"}}}},
                                {"e6", {{1, {"e2", "e3"}}}},
                                {"e7", {{1, {"e2", "e4"}}}}}));

  {
    auto cf = Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6"});
    DiffTable table(cf);
    table.set("e1", Form::term(cf, {"e2", "e3"}, Scalar(-2)));
    table.set("e2", Form::term(cf, {"e1", "e3"}, Scalar(2)));
    table.set("e3", Form::term(cf, {"e1", "e2"}, Scalar(-2)));
    table.set("e4", Form::term(cf, {"e5", "e6"}, Scalar(-2)));
    table.set("e5", Form::term(cf, {"e4", "e6"}, Scalar(2)));
    table.set("e6", Form::term(cf, {"e4", "e5"}, Scalar(-2)));
    entries.push_back(AlgebraEntry{"s3s3", 6, cf, std::move(table),
                                   "product of two compact simple three-dimensional algebras"});
  }

  {
    auto ps = ParamSetBuilder().free_param("a").free_param("b").free_param("c").build();
    auto cf = Coframe::pure({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
    DiffTable table(cf);
    for (std::size_t i = 0; i + 1 < cf->size(); ++i) table.set(cf->name(i), Form::zero(cf));
    Form d = Form::term(cf, {"e1", "e2"}, Scalar::param(ps, "a"));
    d += Form::term(cf, {"e3", "e4"}, Scalar::param(ps, "b"));
    d += Form::term(cf, {"e5", "e6"}, Scalar::param(ps, "c"));
    table.set("e7", std::move(d));
    entries.push_back(AlgebraEntry{"heisenberg_T6", 7, cf, std::move(table),
                                   "circle bundle over a flat six-torus, three-parameter curvature"});
  }

  {
    auto cf = sasakian_coframe(false);
    entries.push_back(AlgebraEntry{"sasakian_local", 7, cf, sasakian_table(cf),
                                   "local three-Sasakian model with opaque transverse forms"});
  }

  return entries;
}

}  // namespace

const std::vector<AlgebraEntry>& algebra_catalog() {
  static const std::vector<AlgebraEntry> catalog = make_catalog();
  return catalog;
}

const AlgebraEntry& catalog_entry(const std::string& name) {
  for (const auto& entry : algebra_catalog()) {
    if (entry.name == name) return entry;
  }
  fail("no catalog entry named '" + name + "'");
}

}  // namespace g2calc
