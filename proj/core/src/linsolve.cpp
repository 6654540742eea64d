#include "g2calc/linsolve.hpp"

#include <algorithm>

#include "g2calc/error.hpp"

namespace g2calc {

namespace {

std::shared_ptr<const ParamSet> common_param_set(const std::vector<LinearEquation>& equations) {
  std::shared_ptr<const ParamSet> widest = ParamSet::none();
  auto consider = [&widest](const std::shared_ptr<const ParamSet>& ps) {
    if (ps->size() > widest->size()) widest = ps;
  };
  for (const auto& eq : equations) {
    for (const auto& [u, c] : eq.coeff) consider(c.param_set());
    consider(eq.rhs.param_set());
  }
  return widest;
}

}  // namespace

SolveResult solve_linear_system(const std::vector<LinearEquation>& equations) {
  SolveResult result;

  std::set<std::string> unknown_set;
  for (const auto& eq : equations)
    for (const auto& [u, c] : eq.coeff) unknown_set.insert(u);
  const std::vector<std::string> unknowns(unknown_set.begin(), unknown_set.end());
  const std::size_t n = unknowns.size();
  const std::size_t m = equations.size();

  const auto ps = common_param_set(equations);
  const Scalar zero = Scalar::zero(ps);

  std::map<std::string, std::size_t> column;
  for (std::size_t k = 0; k < n; ++k) column[unknowns[k]] = k;
  std::vector<std::vector<Scalar>> A(m, std::vector<Scalar>(n, zero));
  std::vector<Scalar> b(m, zero);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [u, c] : equations[i].coeff) A[i][column[u]] = c.lifted_to(ps);
    b[i] = equations[i].rhs.lifted_to(ps);
  }

  // Row echelon form.  Constant pivots allow plain scaled elimination;
  // parameter pivots use fraction-free row updates (no division), with
  // exact division deferred to back-substitution.
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<Scalar> parametric_pivots;
  std::vector<char> column_pivoted(n, 0);
  std::size_t row = 0;
  for (std::size_t colk = 0; colk < n && row < m; ++colk) {
    std::size_t chosen = m;
    bool chosen_constant = false;
    for (std::size_t r = row; r < m; ++r) {
      if (A[r][colk].is_zero()) continue;
      const bool is_const = A[r][colk].as_constant().has_value();
      if (chosen == m || (is_const && !chosen_constant)) {
        chosen = r;
        chosen_constant = is_const;
        if (is_const) break;
      }
    }
    if (chosen == m) continue;
    std::swap(A[chosen], A[row]);
    std::swap(b[chosen], b[row]);
    const Scalar pivot = A[row][colk];
    if (!chosen_constant) parametric_pivots.push_back(pivot);
    for (std::size_t r = row + 1; r < m; ++r) {
      if (A[r][colk].is_zero()) continue;
      const Scalar entry = A[r][colk];
      if (chosen_constant) {
        const Scalar factor = entry.scaled(pivot.as_constant()->inverse());
        for (std::size_t j = colk; j < n; ++j) A[r][j] -= factor * A[row][j];
        b[r] -= factor * b[row];
      } else {
        for (std::size_t j = colk; j < n; ++j) A[r][j] = pivot * A[r][j] - entry * A[row][j];
        b[r] = pivot * b[r] - entry * b[row];
      }
    }
    column_pivoted[colk] = 1;
    pivot_col_of_row.push_back(colk);
    ++row;
  }

  // Rows below the last pivot have all-zero coefficients; a nonzero right
  // hand side there is a derived consequence 0 = rhs, so the system has no
  // solution identically in the parameters.
  for (std::size_t r = row; r < m; ++r) {
    if (!b[r].is_zero()) {
      result.status = SolveStatus::Inconsistent;
      result.detail = "derived equation 0 = " + b[r].str();
      return result;
    }
  }

  std::vector<Scalar> x(n, zero);
  for (std::size_t r = row; r-- > 0;) {
    const std::size_t colk = pivot_col_of_row[r];
    Scalar acc = b[r];
    for (std::size_t j = colk + 1; j < n; ++j) {
      if (!A[r][j].is_zero()) acc -= A[r][j] * x[j];
    }
    const auto quotient = acc.divided_by(A[r][colk]);
    if (!quotient) {
      result.status = SolveStatus::ParametricPivot;
      result.offending_pivot = A[r][colk];
      result.detail = "exact division by pivot '" + A[r][colk].str() + "' failed";
      return result;
    }
    x[colk] = *quotient;
  }

  // Verify against the original equations (the echelon matrix above has
  // been overwritten, so substitute into the inputs).
  for (const auto& eq : equations) {
    Scalar residual = -eq.rhs.lifted_to(ps);
    for (const auto& [u, c] : eq.coeff) residual += c.lifted_to(ps) * x[column[u]];
    if (!residual.is_zero()) {
      if (parametric_pivots.empty())
        fail("internal error: rational elimination produced an invalid solution");
      result.status = SolveStatus::ParametricPivot;
      result.offending_pivot = parametric_pivots.front();
      result.detail = "solution verification failed; a parametric pivot ('" +
                      parametric_pivots.front().str() + "') may be a zero divisor";
      return result;
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    result.solution.emplace(unknowns[k], x[k]);
    if (!column_pivoted[k]) result.free_unknowns.push_back(unknowns[k]);
  }
  result.status = result.free_unknowns.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return result;
}

std::vector<LinearEquation> equations_from_form(const Form& expression,
                                                const std::set<std::string>& unknowns) {
  std::vector<LinearEquation> equations;
  for (const auto& [m, c] : expression.terms()) {
    Scalar::Affine affine = c.affine_in(unknowns);
    LinearEquation eq;
    eq.coeff = std::move(affine.linear);
    eq.rhs = -affine.constant;
    if (eq.coeff.empty() && eq.rhs.is_zero()) continue;
    equations.push_back(std::move(eq));
  }
  return equations;
}

}  // namespace g2calc
