#include "g2calc/param.hpp"

#include "g2calc/error.hpp"

namespace g2calc {

const std::shared_ptr<const ParamSet>& ParamSet::none() {
  static const std::shared_ptr<const ParamSet> empty = std::make_shared<ParamSet>();
  return empty;
}

int ParamSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool ParamSet::same_as(const ParamSet& other) const {
  if (this == &other) return true;
  if (params_.size() != other.params_.size()) return false;
  return is_prefix_of(other);
}

bool ParamSet::is_prefix_of(const ParamSet& other) const {
  if (params_.size() > other.params_.size()) return false;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const Param& a = params_[i];
    const Param& b = other.params_[i];
    if (a.name != b.name || a.kind != b.kind || a.partner != b.partner) return false;
  }
  return true;
}

void ParamSet::add(Param p) {
  if (index_.count(p.name)) fail("duplicate parameter name '" + p.name + "'");
  index_[p.name] = static_cast<int>(params_.size());
  params_.push_back(std::move(p));
}

std::shared_ptr<const ParamSet> ParamSet::extended_with_free(
    const std::vector<std::string>& names) const {
  auto extended = std::make_shared<ParamSet>(*this);
  for (const std::string& name : names) extended->add(Param{name, ParamKind::Free, -1});
  return extended;
}

ParamSetBuilder& ParamSetBuilder::free_param(const std::string& name) {
  set_->add(Param{name, ParamKind::Free, -1});
  return *this;
}

ParamSetBuilder& ParamSetBuilder::sign_param(const std::string& name) {
  set_->add(Param{name, ParamKind::Sign, -1});
  return *this;
}

ParamSetBuilder& ParamSetBuilder::circle_pair(const std::string& cos_name,
                                              const std::string& sin_name) {
  const int cos_index = static_cast<int>(set_->size());
  set_->add(Param{cos_name, ParamKind::Cos, cos_index + 1});
  set_->add(Param{sin_name, ParamKind::Sin, cos_index});
  return *this;
}

std::shared_ptr<const ParamSet> ParamSetBuilder::build() {
  std::shared_ptr<const ParamSet> result = set_;
  set_ = std::make_shared<ParamSet>();
  return result;
}

}  // namespace g2calc
