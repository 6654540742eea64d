#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2calc/form.hpp"
#include "g2calc/scalar.hpp"

namespace g2calc {

// One linear equation sum(coeff[u] * u) = rhs over named unknowns, with
// coefficients in the parameter ring.
struct LinearEquation {
  std::map<std::string, Scalar> coeff;
  Scalar rhs;
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent, ParametricPivot };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  // Unique: the solution.  Underdetermined: a particular solution with all
  // free unknowns set to zero.
  std::map<std::string, Scalar> solution;
  std::vector<std::string> free_unknowns;
  // ParametricPivot: a pivot the elimination could not divide by.
  std::optional<Scalar> offending_pivot;
  std::string detail;

  bool solved() const {
    return status == SolveStatus::Unique || status == SolveStatus::Underdetermined;
  }
};

// Exact linear solve over the parameter ring.  Constant pivots are always
// preferred; parameter-dependent pivots use fraction-free elimination and
// exact division at back-substitution.  Every returned solution is checked
// by substitution into the original equations, so a solved status is
// trustworthy even when pivots involve parameters.  "Unique" means the
// elimination pivoted every unknown; if a pivot is a parameter expression
// that can vanish for special parameter values, other solutions may exist
// there.  "Inconsistent" means no solution exists identically in the
// parameters.
SolveResult solve_linear_system(const std::vector<LinearEquation>& equations);

// Builds one equation per monomial of `expression`, whose coefficients
// must be affine in the given unknowns: linear part = -constant part.
std::vector<LinearEquation> equations_from_form(const Form& expression,
                                                const std::set<std::string>& unknowns);

}  // namespace g2calc
