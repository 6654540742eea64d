#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g2calc/form.hpp"

namespace g2calc {

using WedgeFn = std::function<Form(const Form&, const Form&)>;

// Differentials of the generators of a coframe.  An absent entry means the
// differential is unavailable in the model; taking d of a form that uses
// such a generator is an error.
class DiffTable {
 public:
  explicit DiffTable(std::shared_ptr<const Coframe> cf) : cf_(std::move(cf)) {}

  const std::shared_ptr<const Coframe>& coframe() const { return cf_; }
  void set(const std::string& generator, Form d);
  bool has(const std::string& generator) const { return entries_.count(generator) > 0; }
  const Form& at(const std::string& generator) const;

 private:
  std::shared_ptr<const Coframe> cf_;
  std::map<std::string, Form> entries_;
};

// Exterior derivative by the graded Leibniz rule; ring parameters are
// constants.  `wedge` defaults to the pure-coframe product; models with
// higher-degree generators pass their own.
Form dform(const DiffTable& table, const Form& form, const WedgeFn& wedge = {});

struct DSquaredFailure {
  std::string generator;
  Form residual;
};

// Result of checking d(d(g)) = 0 generator by generator.  A generator is
// skipped when its own differential, or that of a generator occurring in
// it, is unavailable.
struct DSquaredReport {
  std::vector<std::string> checked;
  std::vector<std::string> skipped;
  std::optional<DSquaredFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

DSquaredReport d_squared_check(const DiffTable& table, const WedgeFn& wedge = {});

}  // namespace g2calc
