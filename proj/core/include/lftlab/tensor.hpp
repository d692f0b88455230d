#pragma once

#include <cstddef>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/rational.hpp"

namespace lftlab {

using Shape = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

// Row-major helpers; axis 0 varies slowest.
std::size_t shape_size(const Shape& shape);
std::size_t flatten(const MultiIndex& idx, const Shape& shape);
MultiIndex unflatten(std::size_t flat, const Shape& shape);
Shape strides_of(const Shape& shape);

class TensorGrid {
 public:
  explicit TensorGrid(std::vector<RegularGrid> axes);

  std::size_t dims() const { return axes_.size(); }
  const RegularGrid& axis(std::size_t a) const { return axes_.at(a); }
  const std::vector<RegularGrid>& axes() const { return axes_; }
  const Shape& shape() const { return shape_; }
  std::size_t size() const { return shape_size(shape_); }
  std::vector<Rational> point(const MultiIndex& idx) const;

  bool operator==(const TensorGrid& other) const { return axes_ == other.axes_; }

 private:
  std::vector<RegularGrid> axes_;
  Shape shape_;
};

class TensorSamples {
 public:
  TensorSamples(TensorGrid grid, std::vector<Rational> values);

  const TensorGrid& grid() const { return grid_; }
  const std::vector<Rational>& values() const { return values_; }
  const Shape& shape() const { return grid_.shape(); }
  std::size_t dims() const { return grid_.dims(); }
  std::size_t size() const { return values_.size(); }
  const Rational& at(const MultiIndex& idx) const { return values_[flatten(idx, shape())]; }

  // Axis-aligned second differences are nonnegative everywhere.
  bool is_axis_convex() const;

  bool operator==(const TensorSamples& other) const {
    return grid_ == other.grid_ && values_ == other.values_;
  }

 private:
  TensorGrid grid_;
  std::vector<Rational> values_;
};

struct TensorConjugate {
  // Per-axis grids; empty when the dual points are not a product grid.
  std::vector<DualGrid> duals;
  Shape shape;
  // Dual multi-point and optimizer multi-index per flat index.
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> values;
  std::vector<MultiIndex> optimizers;
};

}  // namespace lftlab
