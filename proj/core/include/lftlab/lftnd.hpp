#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/tensor.hpp"

namespace lftlab {

// Upper bound on primal points for the brute-force oracle.
inline constexpr std::size_t kBruteCap = std::size_t{1} << 20;

// g(..., s, ...) = -max_x { s x - f(..., x, ...) } along one axis.
struct PartialTransform {
  std::size_t axis = 0;
  Shape shape;  // input shape with the axis length replaced by K
  std::vector<Rational> values;
  std::vector<std::size_t> argmax;  // optimizer along the axis, per output cell
};

// Transforms one axis of a row-major array. Lines must be convex along the
// axis (NonConvexSlice otherwise); assignment uses clamped intervals, and the
// last dual point moves to x_{n-1} when it is at or above the line's last gradient.
PartialTransform transform_axis(const Shape& shape, const std::vector<Rational>& values,
                                std::size_t axis, const RegularGrid& axis_grid,
                                const DualGrid& dual);

PartialTransform partial_transform_g(const TensorSamples& f, std::size_t axis,
                                     const DualGrid& dual_axis);

// Range [min c_0, max c_{n-2}] over all lines along the axis.
std::pair<Rational, Rational> axis_bracket(const Shape& shape, const std::vector<Rational>& values,
                                           std::size_t axis, const RegularGrid& axis_grid);

// Shared per-axis regular grids, computed in pass order (last axis first).
std::vector<DualGrid> nd_dual_grids(const TensorSamples& f, const std::vector<std::size_t>& ks);

TensorConjugate lft_nd_regular(const TensorSamples& f, const std::vector<DualGrid>& duals);

TensorConjugate lft_nd_adaptive(const TensorSamples& f);

struct PointConjugate {
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> values;
  std::vector<MultiIndex> optimizers;  // smallest flat index on ties
};

PointConjugate lft_nd_brute(const TensorSamples& f,
                            const std::vector<std::vector<Rational>>& dual_points,
                            unsigned threads = 0);

// Product-grid convenience wrapper around lft_nd_brute.
TensorConjugate lft_nd_brute_grid(const TensorSamples& f, const std::vector<DualGrid>& duals,
                                  unsigned threads = 0);

std::vector<std::vector<Rational>> product_points(const std::vector<DualGrid>& duals);

}  // namespace lftlab
