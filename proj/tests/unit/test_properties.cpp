#include <gtest/gtest.h>

#include "lftlab/generators.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/qlft.hpp"
#include "lftlab/witness.hpp"
#include "oracle.hpp"

using namespace lftlab;

namespace {

constexpr int kIterations = 150;

struct Case {
  FunctionSpec f;
  DualGrid dual;
};

Case random_case(Rng& rng) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 3, 40));
  const auto k = static_cast<std::size_t>(uniform_int(rng, 2, 40));
  auto f = random_convex_1d(rng, n);
  return {f, regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), k)};
}

}  // namespace

TEST(Properties, FenchelYoung) {
  Rng rng(101);
  for (int it = 0; it < kIterations; ++it) {
    auto [f, dual] = random_case(rng);
    auto r = lft_regular(f, dual);
    for (std::size_t j = 0; j < dual.size(); ++j) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        Rational gap = f.sample(i) + r.values[j] - dual.point(j) * f.grid().point(i);
        EXPECT_GE(gap, 0);
        if (i == r.optimizer_index[j]) EXPECT_EQ(gap, 0);
      }
    }
  }
}

TEST(Properties, OracleEquivalence) {
  Rng rng(102);
  for (int it = 0; it < kIterations; ++it) {
    auto [f, dual] = random_case(rng);
    auto fast = lft_regular(f, dual);
    auto xs = oracle::grid_points(f.grid().x0(), f.grid().gamma_x(), f.size());
    auto ref = oracle::conjugate_1d(xs, f.samples(), dual.points());
    EXPECT_EQ(fast.values, ref.values);
    EXPECT_EQ(lft_brute(f, dual).values, ref.values);
    for (std::size_t j = 0; j < dual.size(); ++j) {
      const auto& m = ref.maximizers[j];
      EXPECT_NE(std::find(m.begin(), m.end(), fast.optimizer_index[j]), m.end());
      EXPECT_EQ(lft_brute(f, dual).optimizer_index[j], m.front());
    }
  }
}

TEST(Properties, MonotoneAssignmentAndConvexConjugate) {
  Rng rng(103);
  for (int it = 0; it < kIterations; ++it) {
    auto [f, dual] = random_case(rng);
    auto r = lft_regular(f, dual);
    EXPECT_TRUE(std::is_sorted(r.optimizer_index.begin(), r.optimizer_index.end()));
    EXPECT_TRUE(oracle::second_differences_nonnegative(r.values));
  }
}

TEST(Properties, AdaptiveOptimizerIsOwnIndex) {
  Rng rng(104);
  for (int it = 0; it < kIterations; ++it) {
    auto f = random_convex_1d(rng, static_cast<std::size_t>(uniform_int(rng, 3, 40)));
    for (auto v : {AdaptiveVariant::Centered, AdaptiveVariant::Right, AdaptiveVariant::Left}) {
      auto r = lft_adaptive(f, v);
      auto xs = oracle::grid_points(f.grid().x0(), f.grid().gamma_x(), f.size());
      auto ref = oracle::conjugate_1d(xs, f.samples(), r.dual.points());
      EXPECT_EQ(r.values, ref.values);
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(r.optimizer_index[i], i);
    }
  }
}

TEST(Properties, DoubleTransformBelowSamples) {
  Rng rng(105);
  for (int it = 0; it < kIterations; ++it) {
    auto f = random_convex_unit(rng, static_cast<std::size_t>(uniform_int(rng, 3, 20)));
    const auto k = static_cast<std::size_t>(uniform_int(rng, 2, 20));
    auto star = lft_regular(f, regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), k));
    // evaluate the biconjugate on the primal grid from the conjugate samples
    auto biconj = oracle::conjugate_1d(star.dual.points(), star.values,
                                       oracle::grid_points(f.grid().x0(), f.grid().gamma_x(), f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_LE(biconj.values[i], f.sample(i));
  }
}

TEST(Properties, SimulatorNormPreservedAtEveryStep) {
  Rng rng(106);
  for (int it = 0; it < 60; ++it) {
    auto f = random_convex_1d(rng, static_cast<std::size_t>(uniform_int(rng, 3, 20)));
    auto run = run_qlft_1d_regular(f, static_cast<std::size_t>(uniform_int(rng, 2, 20)), rng(),
                                   PadPolicy::Embed);
    for (const auto& step : run.step_trace) EXPECT_EQ(step.norm, 1) << step.name;
    EXPECT_TRUE(run.verified());
    auto ad = run_qlft_1d_adaptive(f, PadPolicy::Embed);
    for (const auto& step : ad.step_trace) EXPECT_EQ(step.norm, 1) << step.name;
    EXPECT_TRUE(ad.verified());
  }
}

TEST(Properties, SuccessProbabilityIsCountRatio) {
  Rng rng(107);
  for (int it = 0; it < 60; ++it) {
    auto [f, dual] = random_case(rng);
    if (*dual.gamma_s() == 0) continue;
    auto run = run_qlft_1d_regular(f, dual, 1, PadPolicy::Embed);
    auto w = witness_params(discrete_gradients(f), dual);
    EXPECT_EQ(run.W, w.W);
    EXPECT_EQ(run.success_probability,
              Rational(static_cast<long>(dual.size())) / Rational(static_cast<long>(f.size()) * w.W));
  }
}

TEST(Properties, TranscriptsDeterministic) {
  Rng rng(108);
  for (int it = 0; it < 20; ++it) {
    auto [f, dual] = random_case(rng);
    const std::uint64_t seed = rng();
    auto a = run_qlft_1d_regular(f, dual, seed, PadPolicy::Embed);
    auto b = run_qlft_1d_regular(f, dual, seed, PadPolicy::Embed);
    EXPECT_EQ(transcript_jsonl(a), transcript_jsonl(b));
    EXPECT_EQ(a.attempts, b.attempts);
  }
}
