#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/tensor.hpp"

namespace lftlab {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(Rng& rng);
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// Convex samples with random rational slopes (repeats included) on a grid
// with random origin and spacing 1/q.
FunctionSpec random_convex_1d(Rng& rng, std::size_t n);

// Convex samples on the regular grid of [0, 1].
FunctionSpec random_convex_unit(Rng& rng, std::size_t n);

struct QuadraticForm {
  std::vector<std::vector<std::int64_t>> Q;  // symmetric
  std::vector<std::int64_t> b;
};

// Diagonally dominant quadratic whose off-diagonal signs follow a random
// reflection pattern; its discrete partial transforms stay convex.
QuadraticForm random_lnat_quadratic_form(Rng& rng, std::size_t d, bool separable = false);

TensorSamples sample_quadratic(const QuadraticForm& q, const TensorGrid& grid);

// Axis a spans [0, 1] with spacing 1/(shape[a] - 1).
TensorGrid unit_tensor_grid(const Shape& shape);
// One spacing for every axis, 1/(longest - 1). Quadratic forms stay
// diagonally dominant in index space only on such grids.
TensorGrid uniform_tensor_grid(const Shape& shape);

// Sum of independent random 1D convex functions, one per axis.
TensorSamples random_separable(Rng& rng, const Shape& shape);

bool is_separable(const QuadraticForm& q);

}  // namespace lftlab
