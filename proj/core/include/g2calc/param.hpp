#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace g2calc {

// Kinds of ring parameters.  Sign parameters satisfy x^2 = 1.  Circle
// parameters come in (Cos, Sin) pairs satisfying cos^2 + sin^2 = 1; no
// other relation is imposed.
enum class ParamKind { Free, Sign, Cos, Sin };

struct Param {
  std::string name;
  ParamKind kind = ParamKind::Free;
  int partner = -1;  // index of the paired Cos/Sin parameter, -1 otherwise
};

// An ordered list of named parameters.  Scalars store a shared pointer to
// their ParamSet; two scalars interoperate when their sets are equal or one
// is a prefix of the other (the shorter operand is lifted).
class ParamSet {
 public:
  static const std::shared_ptr<const ParamSet>& none();

  std::size_t size() const { return params_.size(); }
  const Param& at(std::size_t i) const { return params_[i]; }
  const std::vector<Param>& params() const { return params_; }

  // Index of a named parameter, or -1.
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name) >= 0; }

  bool same_as(const ParamSet& other) const;
  bool is_prefix_of(const ParamSet& other) const;

  // New set with extra free parameters appended; used to introduce
  // temporary unknowns for linear solves.
  std::shared_ptr<const ParamSet> extended_with_free(const std::vector<std::string>& names) const;

 private:
  friend class ParamSetBuilder;
  void add(Param p);

  std::vector<Param> params_;
  std::map<std::string, int> index_;
};

class ParamSetBuilder {
 public:
  ParamSetBuilder& free_param(const std::string& name);
  // Value constrained to {-1, +1}.
  ParamSetBuilder& sign_param(const std::string& name);
  // Pair constrained by cos^2 + sin^2 = 1; the cosine is stored first so
  // that rewriting cos^2 -> 1 - sin^2 strictly decreases monomials in the
  // lexicographic term order (see Scalar).
  ParamSetBuilder& circle_pair(const std::string& cos_name, const std::string& sin_name);
  std::shared_ptr<const ParamSet> build();

 private:
  std::shared_ptr<ParamSet> set_ = std::make_shared<ParamSet>();
};

}  // namespace g2calc
