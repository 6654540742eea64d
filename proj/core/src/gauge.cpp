#include "g2calc/gauge.hpp"

#include <utility>

#include "g2calc/error.hpp"

namespace g2calc {

namespace {

Form wedge_with(const WedgeFn& wedge, const Form& a, const Form& b) {
  return wedge ? wedge(a, b) : Form::wedge_pure(a, b);
}

// [Y_a, Y_b] paired against Y_c.
Scalar bracket_pairing(const GaugeAlgebra& ga, std::size_t a, std::size_t b, std::size_t c) {
  Scalar out;
  for (std::size_t k = 0; k < ga.size(); ++k) out += ga.brackets[a][b][k] * ga.pairing[k][c];
  return out;
}

}  // namespace

GaugeAlgebra make_gauge_algebra(std::vector<std::string> generators,
                                std::vector<std::vector<std::vector<Scalar>>> brackets,
                                std::vector<std::vector<Scalar>> pairing) {
  const std::size_t n = generators.size();
  if (brackets.size() != n || pairing.size() != n) fail("gauge algebra data has mismatched sizes");
  for (const auto& row : brackets) {
    if (row.size() != n) fail("gauge algebra bracket table is not square");
    for (const auto& entry : row)
      if (entry.size() != n) fail("gauge algebra bracket entry has wrong length");
  }
  for (const auto& row : pairing)
    if (row.size() != n) fail("gauge algebra pairing matrix is not square");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k)
        if (brackets[a][b][k] != -brackets[b][a][k])
          fail("bracket is not antisymmetric in (" + generators[a] + ", " + generators[b] + ")");
      if (pairing[a][b] != pairing[b][a]) fail("pairing matrix is not symmetric");
    }

  // Jacobi: cyclic sum of [Y_a, [Y_b, Y_c]] vanishes componentwise.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t m = 0; m < n; ++m) {
          Scalar total;
          for (std::size_t k = 0; k < n; ++k) {
            total += brackets[b][c][k] * brackets[a][k][m];
            total += brackets[c][a][k] * brackets[b][k][m];
            total += brackets[a][b][k] * brackets[c][k][m];
          }
          if (!total.is_zero())
            fail("Jacobi identity fails on (" + generators[a] + ", " + generators[b] + ", " +
                 generators[c] + ")");
        }

  return GaugeAlgebra{std::move(generators), std::move(brackets), std::move(pairing)};
}

GaugeAlgebra diagonal_bracket_algebra(const std::array<Scalar, 3>& lambda,
                                      std::vector<std::vector<Scalar>> pairing) {
  std::vector<std::vector<std::vector<Scalar>>> brackets(
      3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
  brackets[1][2][0] = lambda[0];
  brackets[2][1][0] = -lambda[0];
  brackets[2][0][1] = lambda[1];
  brackets[0][2][1] = -lambda[1];
  brackets[0][1][2] = lambda[2];
  brackets[1][0][2] = -lambda[2];
  return make_gauge_algebra({"Y1", "Y2", "Y3"}, std::move(brackets), std::move(pairing));
}

std::vector<std::vector<Scalar>> diagonal_pairing(const std::vector<Scalar>& diag) {
  std::vector<std::vector<Scalar>> out(diag.size(), std::vector<Scalar>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) out[i][i] = diag[i];
  return out;
}

AdInvarianceReport ad_invariance_check(const GaugeAlgebra& ga) {
  for (std::size_t a = 0; a < ga.size(); ++a)
    for (std::size_t b = 0; b < ga.size(); ++b)
      for (std::size_t c = 0; c < ga.size(); ++c) {
        const Scalar residual = bracket_pairing(ga, a, b, c) + bracket_pairing(ga, a, c, b);
        if (!residual.is_zero()) return AdInvarianceReport{false, {a, b, c}};
      }
  return AdInvarianceReport{};
}

GaugeField make_gauge_field(GaugeAlgebra algebra, std::vector<Form> connection,
                            const DiffTable& table, const WedgeFn& wedge) {
  if (connection.size() != algebra.size())
    fail("connection component count does not match the gauge algebra");
  std::vector<Form> curvature;
  curvature.reserve(connection.size());
  for (std::size_t a = 0; a < connection.size(); ++a) {
    Form f = dform(table, connection[a], wedge);
    for (std::size_t b = 0; b < connection.size(); ++b)
      for (std::size_t c = 0; c < connection.size(); ++c) {
        const Scalar& coeff = algebra.brackets[b][c][a];
        if (coeff.is_zero()) continue;
        f += wedge_with(wedge, connection[b], connection[c]).scaled(coeff.scaled(Rational(1, 2)));
      }
    curvature.push_back(std::move(f));
  }
  return GaugeField{std::move(algebra), std::move(connection), std::move(curvature), std::nullopt};
}

GaugeField declared_gauge_field(GaugeAlgebra algebra, Form ff) {
  return GaugeField{std::move(algebra), {}, {}, std::move(ff)};
}

Form pairing_wedge(const GaugeField& gf, const WedgeFn& wedge) {
  if (gf.declared_ff) return *gf.declared_ff;
  if (gf.curvature.size() != gf.algebra.size())
    fail("gauge field has neither curvature components nor a declared square");
  Form out(gf.curvature.front().coframe());
  for (std::size_t a = 0; a < gf.curvature.size(); ++a)
    for (std::size_t b = 0; b < gf.curvature.size(); ++b) {
      const Scalar& p = gf.algebra.pairing[a][b];
      if (p.is_zero()) continue;
      out += wedge_with(wedge, gf.curvature[a], gf.curvature[b]).scaled(p);
    }
  return out;
}

Form bianchi_residual(const Form& T, const GaugeField& gf, const DiffTable& table,
                      const WedgeFn& wedge) {
  return dform(table, T, wedge) - pairing_wedge(gf, wedge);
}

MatrixConnection make_matrix_connection(std::vector<std::vector<Form>> gamma) {
  const std::size_t n = gamma.size();
  for (const auto& row : gamma)
    if (row.size() != n) fail("connection matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (gamma[i][j] != -gamma[j][i]) fail("connection matrix is not skew-symmetric");
  return MatrixConnection{std::move(gamma)};
}

MatrixConnectionReport matrix_connection_check(const MatrixConnection& G, const GTwoStructure& s,
                                               const DiffTable& table) {
  const auto& cf = table.coframe();
  const std::size_t n = cf->size();
  if (G.gamma.size() != n) fail("connection matrix size does not match the coframe");
  const FrameMetric& g = s.metric();
  const Form& phi = s.phi();

  MatrixConnectionReport report;

  report.preserves_metric = true;
  for (std::size_t i = 0; i < n && report.preserves_metric; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Form residual(cf);
      for (std::size_t k = 0; k < n; ++k)
        residual += G.gamma[k][j].scaled(g.entry(i, k)) + G.gamma[k][i].scaled(g.entry(j, k));
      if (!residual.is_zero()) {
        report.preserves_metric = false;
        break;
      }
    }

  report.preserves_phi = true;
  for (std::size_t k = 0; k < n && report.preserves_phi; ++k) {
    Form action(cf);
    for (std::size_t m = 0; m < n; ++m) {
      const Form slot = phi.contracted(cf->name(m));
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar a = G.gamma[m][j].coefficient({cf->name(k)});
        if (a.is_zero()) continue;
        action += Form::wedge_pure(Form::generator(cf, cf->name(j)), slot).scaled(a);
      }
    }
    if (!action.is_zero()) report.preserves_phi = false;
  }

  const Form T = torsion_threeform(s);
  report.torsion_matches = true;
  for (std::size_t i = 0; i < n && report.torsion_matches; ++i) {
    Form theta = dform(table, Form::generator(cf, cf->name(i)));
    for (std::size_t j = 0; j < n; ++j)
      theta += Form::wedge_pure(G.gamma[i][j], Form::generator(cf, cf->name(j)));
    if (theta != T.contracted(cf->name(i))) report.torsion_matches = false;
  }

  report.curvature_instanton = true;
  for (std::size_t i = 0; i < n && report.curvature_instanton; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Form r = dform(table, G.gamma[i][j]);
      for (std::size_t k = 0; k < n; ++k)
        r += Form::wedge_pure(G.gamma[i][k], G.gamma[k][j]);
      if (!Form::wedge_pure(r, s.psi()).is_zero()) {
        report.curvature_instanton = false;
        break;
      }
    }

  return report;
}

}  // namespace g2calc
