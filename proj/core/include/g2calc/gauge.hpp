#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2calc/difftable.hpp"
#include "g2calc/g2.hpp"

namespace g2calc {

// Finite-dimensional quadratic Lie algebra data: named generators, bracket
// constants [Y_a, Y_b] = sum_k brackets[a][b][k] Y_k, and a symmetric
// pairing matrix.
struct GaugeAlgebra {
  std::vector<std::string> generators;
  std::vector<std::vector<std::vector<Scalar>>> brackets;
  std::vector<std::vector<Scalar>> pairing;

  std::size_t size() const { return generators.size(); }
};

// Validates shapes, bracket antisymmetry, the Jacobi identity and symmetry
// of the pairing.
GaugeAlgebra make_gauge_algebra(std::vector<std::string> generators,
                                std::vector<std::vector<std::vector<Scalar>>> brackets,
                                std::vector<std::vector<Scalar>> pairing);

// Triple with [Y2,Y3] = l1 Y1, [Y3,Y1] = l2 Y2, [Y1,Y2] = l3 Y3.
GaugeAlgebra diagonal_bracket_algebra(const std::array<Scalar, 3>& lambda,
                                      std::vector<std::vector<Scalar>> pairing);

std::vector<std::vector<Scalar>> diagonal_pairing(const std::vector<Scalar>& diag);

struct AdInvarianceReport {
  bool invariant = true;
  // Generator indices (a, b, c) with <[Y_a,Y_b],Y_c> + <Y_b,[Y_a,Y_c]> != 0;
  // meaningful only when invariant is false.
  std::array<std::size_t, 3> witness{};
};

AdInvarianceReport ad_invariance_check(const GaugeAlgebra& ga);

// A gauge field: either connection 1-forms with their derived curvature
//   F_a = d alpha_a + (1/2) sum_{b,c} brackets[b][c][a] alpha_b ^ alpha_c,
// or an abstract block carrying only its declared paired square <F ^ F>.
struct GaugeField {
  GaugeAlgebra algebra;
  std::vector<Form> connection;
  std::vector<Form> curvature;
  std::optional<Form> declared_ff;
};

GaugeField make_gauge_field(GaugeAlgebra algebra, std::vector<Form> connection,
                            const DiffTable& table, const WedgeFn& wedge = {});
GaugeField declared_gauge_field(GaugeAlgebra algebra, Form ff);

// sum_{a,b} <Y_a, Y_b> F_a ^ F_b, or the declared 4-form.
Form pairing_wedge(const GaugeField& gf, const WedgeFn& wedge = {});

// d T - <F ^ F>.
Form bianchi_residual(const Form& T, const GaugeField& gf, const DiffTable& table,
                      const WedgeFn& wedge = {});

// Frame connection: an n x n matrix of 1-forms, skew-symmetric so that it
// is metric in an orthonormal frame.
struct MatrixConnection {
  std::vector<std::vector<Form>> gamma;
};

MatrixConnection make_matrix_connection(std::vector<std::vector<Form>> gamma);

struct MatrixConnectionReport {
  bool preserves_metric = false;
  bool preserves_phi = false;
  bool torsion_matches = false;
  bool curvature_instanton = false;

  bool all() const {
    return preserves_metric && preserves_phi && torsion_matches && curvature_instanton;
  }
};

// Checks, against the structure s with torsion 3-form T:
//   preserves_metric:     Gamma g + g Gamma^T = 0 entrywise;
//   preserves_phi:        the frame-direction values of Gamma act on phi
//                         as derivations with result zero;
//   torsion_matches:      d e^i + Gamma^i_j ^ e^j = X_i . T for every i;
//   curvature_instanton:  every entry of d Gamma + Gamma ^ Gamma wedges
//                         psi to zero.
MatrixConnectionReport matrix_connection_check(const MatrixConnection& G, const GTwoStructure& s,
                                               const DiffTable& table);

}  // namespace g2calc
