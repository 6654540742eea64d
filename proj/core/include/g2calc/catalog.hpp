#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "g2calc/difftable.hpp"
#include "g2calc/form.hpp"

namespace g2calc {

// Self-dual basis two-forms on the span of the first four generators:
//   sigma_plus(1) = e13 - e24, sigma_plus(2) = -e14 - e23, sigma_plus(3) = e12 + e34.
// The coframe must contain degree-1 generators named e1..e4.
Form sigma_plus(const std::shared_ptr<const Coframe>& cf, int i);

// Anti-self-dual counterparts:
//   sigma_minus(1) = e13 + e24, sigma_minus(2) = e14 - e23, sigma_minus(3) = e12 - e34.
Form sigma_minus(const std::shared_ptr<const Coframe>& cf, int i);

// A named coframe with its structure equations.
struct AlgebraEntry {
  std::string name;
  int dimension = 0;
  std::shared_ptr<const Coframe> coframe;
  DiffTable table;
  std::string description;
};

// The built-in catalog of structure tables used throughout the test suite
// and the command-line reproductions.
const std::vector<AlgebraEntry>& algebra_catalog();

// Lookup by name; errors when absent.
const AlgebraEntry& catalog_entry(const std::string& name);

// Coframe of the local three-Sasakian model: degree-1 generators e1..e7,
// opaque degree-2 generators w1p..w3p (transverse self-dual forms with known
// differentials), w1m..w3m (anti-self-dual, differentials unavailable), and
// the degree-4 transverse volume nu4.  With `with_connection` an extra
// degree-1 generator xiFS with d(xiFS) = w1m is appended.
std::shared_ptr<const Coframe> sasakian_coframe(bool with_connection = false);

// Structure equations of the local three-Sasakian model on a coframe made
// by sasakian_coframe():
//   d e5 = 2(e67 + w1p),  d e6 = 2(e75 + w2p),  d e7 = 2(e56 + w3p),
//   d w1p = 2(e6^w3p - e7^w2p)  and cyclic,  d nu4 = 0,
// with d e1..e4 and d w1m..w3m unavailable.
DiffTable sasakian_table(const std::shared_ptr<const Coframe>& cf);

// Structure table of a two-step coframe:
//   d e^{4+i} = sum_j plus[i][j] sigma_plus(j) + minus[i][j] sigma_minus(j),
// with e1..e4 closed.  Both matrices are 3x3.
DiffTable build_ansatz_table(const std::shared_ptr<const Coframe>& cf,
                             const std::vector<std::vector<Scalar>>& plus,
                             const std::vector<std::vector<Scalar>>& minus);

// The one-parameter-diagonal special case: plus = delta * Id and
// minus = diag(eps[0], eps[1], eps[2]).
DiffTable build_ansatz_table(const std::shared_ptr<const Coframe>& cf, const Scalar& delta,
                             const std::array<Scalar, 3>& eps);

// Verifies that every available differential in the table has purely
// rational coefficients (no ring parameters); errors with the offending
// generator otherwise.
void rationality_check(const DiffTable& table);

}  // namespace g2calc
