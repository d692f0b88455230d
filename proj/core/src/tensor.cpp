#include "lftlab/tensor.hpp"

#include <string>
#include <utility>

#include "lftlab/errors.hpp"

namespace lftlab {

std::size_t shape_size(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t s : shape) n *= s;
  return n;
}

Shape strides_of(const Shape& shape) {
  Shape strides(shape.size(), 1);
  for (std::size_t a = shape.size(); a-- > 1;) strides[a - 1] = strides[a] * shape[a];
  return strides;
}

std::size_t flatten(const MultiIndex& idx, const Shape& shape) {
  if (idx.size() != shape.size()) throw IndexOutOfRange("multi-index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    if (idx[a] >= shape[a]) throw IndexOutOfRange("index out of range on axis " + std::to_string(a));
    flat = flat * shape[a] + idx[a];
  }
  return flat;
}

MultiIndex unflatten(std::size_t flat, const Shape& shape) {
  MultiIndex idx(shape.size());
  for (std::size_t a = shape.size(); a-- > 0;) {
    idx[a] = flat % shape[a];
    flat /= shape[a];
  }
  return idx;
}

TensorGrid::TensorGrid(std::vector<RegularGrid> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw DegenerateGrid("tensor grid needs at least one axis");
  for (const auto& g : axes_) shape_.push_back(g.size());
}

std::vector<Rational> TensorGrid::point(const MultiIndex& idx) const {
  std::vector<Rational> x;
  x.reserve(axes_.size());
  for (std::size_t a = 0; a < axes_.size(); ++a) x.push_back(axes_[a].point(idx.at(a)));
  return x;
}

TensorSamples::TensorSamples(TensorGrid grid, std::vector<Rational> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw DegenerateGrid("expected " + std::to_string(grid_.size()) + " samples, got " +
                         std::to_string(values_.size()));
  }
}

bool TensorSamples::is_axis_convex() const {
  const Shape& sh = shape();
  const Shape st = strides_of(sh);
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    MultiIndex idx = unflatten(flat, sh);
    for (std::size_t a = 0; a < sh.size(); ++a) {
      if (idx[a] == 0 || idx[a] + 1 >= sh[a]) continue;
      if (values_[flat + st[a]] - 2 * values_[flat] + values_[flat - st[a]] < 0) return false;
    }
  }
  return true;
}

}  // namespace lftlab
