#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/rational.hpp"

namespace lftlab {

struct WitnessReport {
  std::int64_t W = 0;
  // floor(max_i (c_i - c_{i-1}) / gamma_s) over interior i.
  std::int64_t W_floor = 0;
  Rational nu;
  Rational success_probability;
  std::optional<Rational> kappa_bound;
  // Number of dual indices assigned to each primal index.
  std::vector<std::size_t> multiplicity;
};

WitnessReport witness_params(const GradientVector& g, const DualGrid& dual,
                             std::optional<Rational> kappa = std::nullopt);

// Per-index blocks of a Strict assignment; block i lists the j with x*_j = x_i.
std::vector<DualBlock> dual_blocks(const GradientVector& g, const DualGrid& dual);

// (i, m) is in A when x_i is the optimizer of at least m+1 dual points.
bool membership_A(std::size_t i, std::size_t m, const GradientVector& g, const DualGrid& dual);

// Literal floor rule; kept as a cross-check, its count need not equal K.
bool membership_A_floor(std::size_t i, std::size_t m, const GradientVector& g,
                        const DualGrid& dual);

std::optional<std::size_t> dual_index_j(std::size_t i, std::size_t m, const GradientVector& g,
                                        const DualGrid& dual);

}  // namespace lftlab
