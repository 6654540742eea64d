#include "g2calc/algebra.hpp"

#include "g2calc/error.hpp"

namespace g2calc {

PureAlgebra::PureAlgebra(DiffTable table, FrameMetric metric)
    : table_(std::move(table)), metric_(std::move(metric)) {
  if (!table_.coframe()->same_as(*metric_.coframe()))
    fail("differential table and metric live on different coframes");
  if (!table_.coframe()->is_pure()) fail("PureAlgebra requires a pure coframe");
}

}  // namespace g2calc
