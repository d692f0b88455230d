#include "lftlab/witness.hpp"

#include <algorithm>
#include <string>

#include "lftlab/errors.hpp"

namespace lftlab {

std::vector<DualBlock> dual_blocks(const GradientVector& g, const DualGrid& dual) {
  const std::size_t n = g.point_count();
  const bool pin = pins_last(g, dual);
  std::vector<DualBlock> blocks;
  blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocks.push_back(dual_block(i, n, g.at(static_cast<long>(i) - 1), g.at(static_cast<long>(i)),
                                dual, pin));
  }
  return blocks;
}

WitnessReport witness_params(const GradientVector& g, const DualGrid& dual,
                             std::optional<Rational> kappa) {
  if (!dual.gamma_s() || *dual.gamma_s() == 0) {
    throw ZeroSpacing("witness parameters need a regular dual grid with gamma_s > 0");
  }
  // validates the range as a side effect
  optimizer_map(g, dual, RangePolicy::Strict);

  WitnessReport r;
  for (const DualBlock& b : dual_blocks(g, dual)) {
    r.multiplicity.push_back(b.count);
    r.W = std::max<std::int64_t>(r.W, static_cast<std::int64_t>(b.count));
  }
  const auto& c = g.values();
  Rational max_gap(0);
  for (std::size_t i = 1; i < c.size(); ++i) max_gap = std::max<Rational>(max_gap, c[i] - c[i - 1]);
  r.W_floor = floor_to_int(max_gap / *dual.gamma_s());

  const RegularGrid& grid = g.grid();
  r.nu = (g.last() - g.first()) / (grid.last() - grid.x0());
  r.success_probability = Rational(static_cast<unsigned long>(dual.size())) /
                          Rational(static_cast<unsigned long>(grid.size() * r.W));
  r.kappa_bound = std::move(kappa);
  return r;
}

namespace {

void check_index(std::size_t i, const GradientVector& g) {
  if (i >= g.point_count()) {
    throw IndexOutOfRange("i = " + std::to_string(i) + " outside [0, " +
                          std::to_string(g.point_count()) + ")");
  }
}

}  // namespace

bool membership_A(std::size_t i, std::size_t m, const GradientVector& g, const DualGrid& dual) {
  check_index(i, g);
  optimizer_map(g, dual, RangePolicy::Strict);
  const bool pin = pins_last(g, dual);
  const std::size_t n = g.point_count();
  DualBlock b =
      dual_block(i, n, g.at(static_cast<long>(i) - 1), g.at(static_cast<long>(i)), dual, pin);
  return m < b.count;
}

bool membership_A_floor(std::size_t i, std::size_t m, const GradientVector& g,
                        const DualGrid& dual) {
  check_index(i, g);
  if (!dual.gamma_s() || *dual.gamma_s() == 0) throw ZeroSpacing("floor rule needs gamma_s > 0");
  const std::size_t n = g.point_count();
  if (i == 0 || i + 1 == n) return m == 0;
  const Rational ratio = (g.at(static_cast<long>(i)) - g.at(static_cast<long>(i) - 1)) /
                         *dual.gamma_s();
  return floor_to_int(ratio) >= static_cast<std::int64_t>(m) + 1;
}

std::optional<std::size_t> dual_index_j(std::size_t i, std::size_t m, const GradientVector& g,
                                        const DualGrid& dual) {
  if (!membership_A(i, m, g, dual)) return std::nullopt;
  const std::size_t n = g.point_count();
  if (i == 0 && m == 0) return 0;
  if (i + 1 == n && m == 0) return dual.size() - 1;
  const Rational lower = g.at(static_cast<long>(i) - 1);
  const auto& s = dual.points();
  auto it = std::upper_bound(s.begin(), s.end(), lower);
  return static_cast<std::size_t>(it - s.begin()) + m;
}

}  // namespace lftlab
