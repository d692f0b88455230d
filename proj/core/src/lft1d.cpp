#include "lftlab/lft1d.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lftlab/errors.hpp"

namespace lftlab {

GradientVector::GradientVector(RegularGrid grid, std::vector<Rational> c, Rational epsilon)
    : grid_(std::move(grid)), c_(std::move(c)), epsilon_(std::move(epsilon)) {
  if (c_.size() + 1 != grid_.size()) throw DegenerateGrid("gradient count must be n-1");
  if (epsilon_ <= 0) throw InvalidK("epsilon must be positive");
}

Rational GradientVector::at(long i) const {
  const long n = static_cast<long>(grid_.size());
  if (i < -1 || i > n - 1) {
    throw IndexOutOfRange("gradient index " + std::to_string(i) + " outside [-1, " +
                          std::to_string(n - 1) + "]");
  }
  if (i == -1) return c_.front() - epsilon_;
  if (i == n - 1) return c_.back() + epsilon_;
  return c_[static_cast<std::size_t>(i)];
}

GradientVector discrete_gradients(const FunctionSpec& f, const Rational& epsilon) {
  if (f.size() < 2) throw DegenerateGrid("need at least two samples");
  f.require_convex();
  const Rational& gx = f.grid().gamma_x();
  std::vector<Rational> c;
  c.reserve(f.size() - 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    c.emplace_back((f.sample(i + 1) - f.sample(i)) / gx);
  }
  return GradientVector(f.grid(), std::move(c), epsilon);
}

std::pair<Rational, Rational> nontrivial_dual_range(const GradientVector& g) {
  return {g.first(), g.last()};
}

DualGrid regular_dual_grid(const std::pair<Rational, Rational>& range, std::size_t k) {
  if (k < 2) throw InvalidK("regular dual grid needs k >= 2, got " + std::to_string(k));
  if (range.first > range.second) throw InvalidK("empty dual range");
  Rational gamma_s = (range.second - range.first) / Rational(static_cast<unsigned long>(k - 1));
  return DualGrid::regular(range.first, gamma_s, k);
}

namespace {

void check_range(const GradientVector& g, const DualGrid& dual) {
  for (std::size_t j = 0; j < dual.size(); ++j) {
    const Rational& s = dual.point(j);
    if (s < g.first() || s > g.last()) {
      throw OutOfRangeDual("s_" + std::to_string(j) + " = " + to_string(s) + " outside [" +
                           to_string(g.first()) + ", " + to_string(g.last()) + "]");
    }
  }
}

Rational default_epsilon(const DualGrid& dual) {
  if (dual.gamma_s() && *dual.gamma_s() > 0) return *dual.gamma_s();
  return Rational(1);
}

}  // namespace

bool pins_last(const GradientVector& g, const DualGrid& dual) {
  return dual.size() >= 2 && dual.points().back() >= g.last();
}

std::vector<std::size_t> optimizer_map(const GradientVector& g, const DualGrid& dual,
                                       RangePolicy policy) {
  if (policy == RangePolicy::Strict) check_range(g, dual);
  const auto& c = g.values();
  const std::size_t k = dual.size();
  std::vector<std::size_t> idx(k);
  std::size_t i = 0;
  // i = #{c_l < s_j}; both sequences are sorted so one sweep suffices
  for (std::size_t j = 0; j < k; ++j) {
    while (i < c.size() && c[i] < dual.point(j)) ++i;
    idx[j] = i;
  }
  if (policy == RangePolicy::Strict && pins_last(g, dual)) idx[k - 1] = g.point_count() - 1;
  return idx;
}

DualBlock dual_block(std::size_t i, std::size_t n, const std::optional<Rational>& c_prev,
                     const std::optional<Rational>& c_cur, const DualGrid& dual, bool pin_last) {
  const auto& s = dual.points();
  const std::size_t k = s.size();
  std::size_t first = c_prev ? static_cast<std::size_t>(
                                   std::upper_bound(s.begin(), s.end(), *c_prev) - s.begin())
                             : 0;
  std::size_t end = c_cur ? static_cast<std::size_t>(
                                std::upper_bound(s.begin(), s.end(), *c_cur) - s.begin())
                          : k;
  if (end < first) end = first;
  if (pin_last && k >= 2) {
    if (i + 1 == n) {
      first = std::min(first, k - 1);
      end = k;
    } else if (end == k && first < k) {
      end = k - 1;
    }
  }
  return {first, end - first};
}

ConjugateResult lft_regular(const FunctionSpec& f, const DualGrid& dual, RangePolicy policy) {
  GradientVector g = discrete_gradients(f, default_epsilon(dual));
  ConjugateResult out{dual, {}, optimizer_map(g, dual, policy)};
  out.values.reserve(dual.size());
  for (std::size_t j = 0; j < dual.size(); ++j) {
    const std::size_t i = out.optimizer_index[j];
    out.values.emplace_back(dual.point(j) * f.grid().point(i) - f.sample(i));
  }
  return out;
}

DualGrid adaptive_dual_grid(const GradientVector& g, AdaptiveVariant variant) {
  const auto& c = g.values();
  const std::size_t n = g.point_count();
  std::vector<Rational> s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // endpoints use the epsilon -> 0 limit of the sentinels
    const Rational& lo = i == 0 ? c.front() : c[i - 1];
    const Rational& hi = i + 1 == n ? c.back() : c[i];
    switch (variant) {
      case AdaptiveVariant::Centered: s.emplace_back((lo + hi) / 2); break;
      case AdaptiveVariant::Right: s.push_back(hi); break;
      case AdaptiveVariant::Left: s.push_back(lo); break;
    }
  }
  return DualGrid::from_points(std::move(s), DualKind::Adaptive);
}

ConjugateResult lft_adaptive(const FunctionSpec& f, AdaptiveVariant variant) {
  GradientVector g = discrete_gradients(f);
  DualGrid dual = adaptive_dual_grid(g, variant);
  ConjugateResult out{dual, {}, {}};
  out.values.reserve(f.size());
  out.optimizer_index.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.values.emplace_back(dual.point(i) * f.grid().point(i) - f.sample(i));
    out.optimizer_index.push_back(i);
  }
  return out;
}

ConjugateResult lft_brute(const FunctionSpec& f, const DualGrid& dual) {
  ConjugateResult out{dual, {}, {}};
  out.values.reserve(dual.size());
  out.optimizer_index.reserve(dual.size());
  std::vector<Rational> x(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) x[i] = f.grid().point(i);
  Rational cand;
  for (const Rational& s : dual.points()) {
    Rational best = s * x[0] - f.sample(0);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < f.size(); ++i) {
      cand = s * x[i] - f.sample(i);
      if (cand > best) {
        best = cand;
        arg = i;
      }
    }
    out.values.push_back(best);
    out.optimizer_index.push_back(arg);
  }
  return out;
}

Rational convergence_gap(const FunctionSpec& f, const ConjugateEvaluator& continuous_conjugate,
                         const DualGrid& dual) {
  ConjugateResult r = lft_regular(f, dual, RangePolicy::Clamp);
  Rational gap(0);
  for (std::size_t j = 0; j < dual.size(); ++j) {
    Rational d = abs(continuous_conjugate(dual.point(j)) - r.values[j]);
    if (d > gap) gap = d;
  }
  return gap;
}

const char* to_string(AdaptiveVariant v) {
  switch (v) {
    case AdaptiveVariant::Centered: return "centered";
    case AdaptiveVariant::Right: return "right";
    case AdaptiveVariant::Left: return "left";
  }
  return "centered";
}

std::optional<AdaptiveVariant> parse_adaptive_variant(const std::string& name) {
  if (name == "centered") return AdaptiveVariant::Centered;
  if (name == "right") return AdaptiveVariant::Right;
  if (name == "left") return AdaptiveVariant::Left;
  return std::nullopt;
}

}  // namespace lftlab
