#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2calc/g2.hpp"

namespace g2calc {

// The local three-Sasakian model.  The coframe keeps the transverse
// self-dual forms w1p..w3p (with known differentials), the anti-self-dual
// forms w1m..w3m (differentials unavailable), and the transverse volume nu4
// as opaque generators; products and the Hodge star are computed by
// expanding them over the local degree-1 coframe e1..e7
//   w1p = e12+e34,  w2p = e13-e24,  w3p = e14+e23,
//   w1m = e12-e34,  w2m = e13+e24,  w3m = e14-e23,  nu4 = e1234
// and collecting even transverse blocks back afterwards.  With
// `with_connection` an abelian connection generator xiFS with
// d(xiFS) = w1m is available; xiFS itself has no local expansion, so it may
// only appear through its curvature.
class SasAlgebra final : public ExtAlgebra {
 public:
  explicit SasAlgebra(bool with_connection = false);

  const std::shared_ptr<const Coframe>& coframe() const override { return table_.coframe(); }
  const std::shared_ptr<const Coframe>& pure_coframe() const override { return pure_cf_; }
  Form wedge(const Form& a, const Form& b) const override;
  Form d(const Form& a) const override { return dform(table_, a, wedge_fn()); }
  Form star(const Form& a) const override;
  Form volume() const override;
  int dimension() const override { return 7; }
  Form expanded(const Form& a) const override;
  Form reassembled(const Form& a) const override;

  const DiffTable& table() const { return table_; }

 private:
  DiffTable table_;
  std::shared_ptr<const Coframe> pure_cf_;
  FrameMetric round_metric_;
  std::vector<Form> expansions_;
};

// The four structure 3-forms of the model.
enum class SasKind { ts, np, ts_hat, np_hat };

// ts:     e567 + e5^w1p + e6^w2p - e7^w3p
// np:     -(27/125) e567 + (27/25)(e5^w1p + e6^w2p + e7^w3p)
// ts_hat: e567 - e5^w1p - e6^w2p - e7^w3p
// np_hat: np with the signs of the e5 and e6 legs flipped
Form sas_phi(const SasAlgebra& alg, SasKind kind);

// G2-structure with metric, volume and dual 4-form derived from the 3-form.
GTwoStructure build_sas_structure(const SasAlgebra& alg, SasKind kind);

struct SasEigenvalues {
  std::array<Rational, 3> lambda;
  // "abelian", "su2", "sl2r", or "degenerate" by the sign pattern.
  std::string gauge_class;
};

// Solves (d e^{4+i} + lambda_i E_i) ^ psi = 0 for the three eigenvalues,
// where (E_1, E_2, E_3) = (e67, e75, e56).
SasEigenvalues solve_instanton_eigenvalues(const SasAlgebra& alg, SasKind kind);

// Curvature components d e^{4+i} + lambda_i E_i of the invariant connection
// with diagonal structure matrix diag(lambda).
std::vector<Form> connection_curvatures(const SasAlgebra& alg,
                                        const std::array<Rational, 3>& lambda);

// The anti-self-dual triple (w1m, w2m, w3m).
std::vector<Form> asd_curvatures(const SasAlgebra& alg);

// Curvature k * w1m of the k-th power of the abelian connection xiFS.
Form fs_curvature(const SasAlgebra& alg, const Scalar& k);

// One summand of a product gauge field: either a list of curvature 2-forms
// paired with scale * Id, or an already-paired declared 4-form <F ^ F>
// multiplied by scale.
struct CompositeBlock {
  std::string label;
  std::vector<Form> curvatures;
  Scalar scale;
  std::optional<Form> declared_square;
};

CompositeBlock curvature_block(std::string label, std::vector<Form> curvatures, Scalar scale);
CompositeBlock declared_block(std::string label, Form square, Scalar scale);

// scale * sum_i F_i ^ F_i, or scale * declared_square.
Form block_square(const ExtAlgebra& alg, const CompositeBlock& block);

// d T - sum of block squares.  Every curvature block must pass the
// instanton check against the structure first; declared blocks are taken
// as given.
Form composite_bianchi_residual(const GTwoStructure& s, const std::vector<CompositeBlock>& blocks);

// For ts and np: verifies the squared-curvature display
//   sum F_ts^2  = -16 psi_ts + 20 w1p^2,
//   sum F_np^2  = -(400/81) psi_np + 20 w1p^2,
// then returns the one-parameter family residual
//   dT - [ -(t/6) sum F^2 + (20t/6) w1p^2 + (8/3)(1-t) psi ]        (ts)
//   dT - [ -(27t/50) sum F^2 + (54t/5) w1p^2 + (8/3)(1-t) psi ]     (np),
// the inverse pairing normalisation having been cleared from both sides.
Form dt_family_residual(const GTwoStructure& s, SasKind kind, const Scalar& t);

}  // namespace g2calc
