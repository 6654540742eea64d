#pragma once

#include <memory>

#include "g2calc/difftable.hpp"
#include "g2calc/form.hpp"
#include "g2calc/metric.hpp"

namespace g2calc {

// A differential exterior algebra with Hodge duality: the interface the
// geometric layers are written against.  PureAlgebra is the standard
// implementation on a degree-1 coframe; models that keep distinguished
// higher-degree forms as opaque generators implement the same interface
// with their own product and star.
class ExtAlgebra {
 public:
  virtual ~ExtAlgebra() = default;

  virtual const std::shared_ptr<const Coframe>& coframe() const = 0;
  virtual Form wedge(const Form& a, const Form& b) const = 0;
  virtual Form d(const Form& a) const = 0;
  virtual Form star(const Form& a) const = 0;
  virtual Form volume() const = 0;
  // Dimension of the underlying manifold (not the generator count).
  virtual int dimension() const = 0;

  // Coframe of the degree-1 expansion model; the coframe itself when pure.
  virtual const std::shared_ptr<const Coframe>& pure_coframe() const { return coframe(); }
  // Rewrites a form over pure_coframe(), expanding opaque generators;
  // identity when the coframe is already pure.
  virtual Form expanded(const Form& a) const { return a; }
  // Inverse of expanded(): collects recognizable blocks back into opaque
  // generators; identity when the coframe is already pure.
  virtual Form reassembled(const Form& a) const { return a; }

  Form zero() const { return Form::zero(coframe()); }
  Form from_scalar(Scalar c) const { return Form::from_scalar(coframe(), std::move(c)); }
  Form wedge(const Form& a, const Form& b, const Form& c) const {
    return wedge(wedge(a, b), c);
  }
  WedgeFn wedge_fn() const {
    return [this](const Form& a, const Form& b) { return wedge(a, b); };
  }
};

class PureAlgebra final : public ExtAlgebra {
 public:
  PureAlgebra(DiffTable table, FrameMetric metric);

  const DiffTable& table() const { return table_; }
  const FrameMetric& metric() const { return metric_; }

  const std::shared_ptr<const Coframe>& coframe() const override { return table_.coframe(); }
  Form wedge(const Form& a, const Form& b) const override { return Form::wedge_pure(a, b); }
  Form d(const Form& a) const override { return dform(table_, a); }
  Form star(const Form& a) const override { return metric_.hodge(a); }
  Form volume() const override { return metric_.volume(); }
  int dimension() const override { return static_cast<int>(table_.coframe()->size()); }

  using ExtAlgebra::wedge;

 private:
  DiffTable table_;
  FrameMetric metric_;
};

}  // namespace g2calc
