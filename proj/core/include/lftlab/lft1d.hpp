#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/rational.hpp"

namespace lftlab {

// Forward differences c_0..c_{n-2} of a sampled function, with sentinels
// c_{-1} = c_0 - epsilon and c_{n-1} = c_{n-2} + epsilon.
class GradientVector {
 public:
  GradientVector(RegularGrid grid, std::vector<Rational> c, Rational epsilon);

  const RegularGrid& grid() const { return grid_; }
  const std::vector<Rational>& values() const { return c_; }
  const Rational& epsilon() const { return epsilon_; }
  std::size_t point_count() const { return grid_.size(); }
  const Rational& first() const { return c_.front(); }
  const Rational& last() const { return c_.back(); }

  // Valid for -1 <= i <= n-1.
  Rational at(long i) const;

 private:
  RegularGrid grid_;
  std::vector<Rational> c_;
  Rational epsilon_;
};

enum class RangePolicy {
  // Dual points must lie in [c_0, c_{n-2}]; the last point is pinned to x_{n-1}.
  Strict,
  // Points below c_0 map to x_0, points above c_{n-2} map to x_{n-1}; no pins.
  Clamp,
};

enum class AdaptiveVariant { Centered, Right, Left };

struct ConjugateResult {
  DualGrid dual;
  std::vector<Rational> values;
  std::vector<std::size_t> optimizer_index;
};

// Contiguous run of dual indices assigned to one primal index.
struct DualBlock {
  std::size_t first = 0;
  std::size_t count = 0;
};

GradientVector discrete_gradients(const FunctionSpec& f, const Rational& epsilon = Rational(1));

std::pair<Rational, Rational> nontrivial_dual_range(const GradientVector& g);

DualGrid regular_dual_grid(const std::pair<Rational, Rational>& range, std::size_t k);

std::vector<std::size_t> optimizer_map(const GradientVector& g, const DualGrid& dual,
                                       RangePolicy policy = RangePolicy::Strict);

// Block of dual indices whose optimizer is x_i, from the two gradients
// around i alone. An empty optional stands for an unbounded side.
DualBlock dual_block(std::size_t i, std::size_t n, const std::optional<Rational>& c_prev,
                     const std::optional<Rational>& c_cur, const DualGrid& dual, bool pin_last);

// True when a Strict assignment moves the last dual point onto x_{n-1}.
bool pins_last(const GradientVector& g, const DualGrid& dual);

ConjugateResult lft_regular(const FunctionSpec& f, const DualGrid& dual,
                            RangePolicy policy = RangePolicy::Strict);

DualGrid adaptive_dual_grid(const GradientVector& g, AdaptiveVariant variant);

ConjugateResult lft_adaptive(const FunctionSpec& f,
                             AdaptiveVariant variant = AdaptiveVariant::Centered);

ConjugateResult lft_brute(const FunctionSpec& f, const DualGrid& dual);

using ConjugateEvaluator = std::function<Rational(const Rational&)>;

Rational convergence_gap(const FunctionSpec& f, const ConjugateEvaluator& continuous_conjugate,
                         const DualGrid& dual);

const char* to_string(AdaptiveVariant v);
std::optional<AdaptiveVariant> parse_adaptive_variant(const std::string& name);

}  // namespace lftlab
