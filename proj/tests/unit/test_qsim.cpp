#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lftlab/errors.hpp"
#include "lftlab/fixtures.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/lftnd.hpp"
#include "lftlab/qlft.hpp"
#include "lftlab/witness.hpp"
#include "oracle.hpp"

using namespace lftlab;
using oracle::frac;

namespace {

FunctionSpec unit_samples(std::vector<Rational> v) {
  const std::size_t n = v.size();
  return FunctionSpec(RegularGrid(0, frac(1, static_cast<long>(n - 1)), n), std::move(v));
}

// ex1 sampled on four points of [0, 3/4].
FunctionSpec ex1_four() {
  const auto& fx = fixture(Example::Ex1);
  std::vector<Rational> v;
  for (long i = 0; i < 4; ++i) v.push_back(fx.f(frac(i, 4)));
  return FunctionSpec(RegularGrid(0, frac(1, 4), 4), v);
}

DualGrid natural_dual(const FunctionSpec& f, std::size_t k) {
  return regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), k);
}

}  // namespace

TEST(Prepare, UniformOverIndices) {
  auto s = prepare_superposition(unit_samples({2, 2, 2, 2}));
  EXPECT_EQ(s.size(), 4u);
  for (const auto& [label, amp] : s.terms()) {
    EXPECT_EQ(amp.weight, frac(1, 4));
    EXPECT_EQ(amp.sign, 1);
  }
  EXPECT_EQ(s.norm(), 1);
  EXPECT_EQ(s.index_qubits(), 2);
}

TEST(Prepare, CarriesNeighbourSamples) {
  auto s = prepare_superposition(ex1_four());
  bool found = false;
  for (const auto& [label, amp] : s.terms()) {
    if (label.integer("i") != 1) continue;
    found = true;
    EXPECT_EQ(label.rational("f_prev"), frac(1, 2));
    EXPECT_EQ(label.rational("f"), frac(3, 8));
    EXPECT_EQ(label.rational("f_next"), frac(3, 8));
  }
  EXPECT_TRUE(found);
}

TEST(Prepare, BoundaryWordsAreUndefined) {
  auto s = prepare_superposition(ex1_four());
  for (const auto& [label, amp] : s.terms()) {
    auto i = label.integer("i");
    EXPECT_EQ(is_defined(label.get("x_prev")), i != 0);
    EXPECT_EQ(is_defined(label.get("f_next")), i != 3);
  }
}

TEST(Prepare, SizeRules) {
  EXPECT_THROW(prepare_superposition(example_spec(Example::Ex1)), NotPowerOfTwo);
  auto s = prepare_superposition(example_spec(Example::Ex1), PadPolicy::Embed);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s.index_qubits(), 3);
  EXPECT_EQ(s.norm(), 1);
  EXPECT_THROW(prepare_superposition(unit_samples({0, 1, 0, 0})), NonConvexInput);
}

TEST(AttachGradients, MatchClassicalGradients) {
  auto f = example_spec(Example::Ex1);
  auto s = attach_gradients(prepare_superposition(f, PadPolicy::Embed));
  auto g = discrete_gradients(f);
  for (const auto& [label, amp] : s.terms()) {
    auto i = label.integer("i");
    EXPECT_EQ(label.rational("c_prev"), g.at(i - 1));
    EXPECT_EQ(label.rational("c"), g.at(i));
    if (i == 2) {
      EXPECT_EQ(label.rational("c_prev"), 0);
      EXPECT_EQ(label.rational("c"), frac(1, 2));
    }
  }
  EXPECT_EQ(s.norm(), 1);
}

TEST(AttachGradients, RejectsMissingRegisters) {
  QState bare;
  BasisLabel l;
  l.set("i", std::int64_t{0});
  bare.add(l, {1, 1});
  EXPECT_THROW(attach_gradients(bare), MalformedState);
}

TEST(Postselect, ExampleTwoAlwaysAccepts) {
  auto f = example_spec(Example::Ex2);
  auto s = attach_gradients(prepare_superposition(f, PadPolicy::Embed));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [post, out] = indicator_postselect(s, natural_dual(f, 5), seed);
    EXPECT_EQ(out.success_probability, 1);
    EXPECT_EQ(out.attempts, 1);
  }
}

TEST(Postselect, ExampleThreeHalf) {
  auto f = example_spec(Example::Ex3);
  auto dual = natural_dual(f, 5);
  auto s = attach_gradients(prepare_superposition(f, PadPolicy::Embed));
  auto [post, out] = indicator_postselect(s, dual, 1);
  EXPECT_EQ(out.success_probability, frac(1, 2));
  EXPECT_EQ(out.W, 2);
  EXPECT_EQ(post.size(), 5u);
  EXPECT_EQ(post.norm(), 1);
  auto opt = optimizer_map(discrete_gradients(f), dual);
  std::set<std::pair<std::int64_t, Rational>> got, want;
  for (const auto& [label, amp] : post.terms()) {
    EXPECT_EQ(amp.weight, frac(1, 5));
    got.emplace(label.integer("j"), label.rational("x_star"));
  }
  for (std::size_t j = 0; j < 5; ++j) want.emplace(j, f.grid().point(opt[j]));
  EXPECT_EQ(got, want);
}

TEST(Postselect, ExampleThreeEmpiricalRate) {
  auto f = example_spec(Example::Ex3);
  auto dual = natural_dual(f, 5);
  auto s = attach_gradients(prepare_superposition(f, PadPolicy::Embed));
  std::int64_t draws = 0;
  const int trials = 4000;
  for (int t = 0; t < trials; ++t) draws += indicator_postselect(s, dual, 1000 + t).second.attempts;
  const double rate = static_cast<double>(trials) / static_cast<double>(draws);
  EXPECT_NEAR(rate, 0.5, 0.03);
}

TEST(Finalize, ExampleOneLabels) {
  auto f = example_spec(Example::Ex1);
  auto run = run_qlft_1d_regular(f, 4, 7, PadPolicy::Embed);
  std::map<std::int64_t, Rational> labels;
  for (const auto& [j, v] : conjugate_labels(run.final_state)) labels[j] = v;
  std::map<std::int64_t, Rational> want{{0, frac(-1, 2)}, {1, frac(-3, 8)}, {2, frac(-1, 8)}, {3, frac(1, 4)}};
  EXPECT_EQ(labels, want);
  for (const auto& [label, amp] : run.final_state.terms()) {
    EXPECT_FALSE(label.has("f_x_star"));
    EXPECT_EQ(label.garbage().size(), 3u);
  }
  EXPECT_TRUE(run.verified());
}

TEST(Finalize, ConstantSinglePoint) {
  auto f = unit_samples({3, 3, 3, 3});
  auto run = run_qlft_1d_regular(f, DualGrid::from_points({0}), 1);
  ASSERT_EQ(run.final_state.size(), 1u);
  EXPECT_EQ(run.final_state.terms().begin()->first.rational("f_star"), -3);
}

TEST(Finalize, FenchelYoungEquality) {
  auto f = example_spec(Example::Ex3);
  auto run = run_qlft_1d_regular(f, 5, 3, PadPolicy::Embed);
  auto dual = run.duals[0];
  auto xs = oracle::grid_points(f.grid().x0(), f.grid().gamma_x(), f.size());
  for (const auto& [label, amp] : run.final_state.terms()) {
    auto j = static_cast<std::size_t>(label.integer("j"));
    Rational x;
    for (const auto& r : label.garbage()) {
      if (r.name == "x_star") x = std::get<Rational>(r.value);
    }
    std::size_t i = 0;
    while (xs[i] != x) ++i;
    EXPECT_EQ(f.sample(i) + label.rational("f_star"), dual.point(j) * x);
  }
}

TEST(RegularRun, PowerOfTwoInstance) {
  auto f = ex1_four();
  auto run = run_qlft_1d_regular(f, 4, 5);
  EXPECT_TRUE(run.verified());
  auto w = witness_params(discrete_gradients(f), run.duals[0]);
  EXPECT_EQ(run.success_probability, Rational(4) / Rational(4 * w.W));
  EXPECT_THROW(run_qlft_1d_regular(f, 3, 5), NotPowerOfTwo);
}

TEST(RegularRun, WEqualsOneIsUnitaryLike) {
  // slopes 0, 1, 2 with a three-point dual grid on [0, 2]
  auto f = FunctionSpec(RegularGrid(0, 1, 4), {0, 0, 1, 3});
  auto run = run_qlft_1d_regular(f, DualGrid::from_points({0, 1, 2, 2}), 2);
  EXPECT_EQ(run.attempts, 1);
  EXPECT_TRUE(run.verified());
}

TEST(RegularRun, SeedDeterminism) {
  auto f = example_spec(Example::Ex3);
  auto a = run_qlft_1d_regular(f, 5, 99, PadPolicy::Embed);
  auto b = run_qlft_1d_regular(f, 5, 99, PadPolicy::Embed);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_EQ(a.final_state, b.final_state);
  EXPECT_EQ(transcript_jsonl(a), transcript_jsonl(b));
}

TEST(AdaptiveRun, ExampleOne) {
  auto run = run_qlft_1d_adaptive(example_spec(Example::Ex1), PadPolicy::Embed);
  EXPECT_EQ(run.attempts, 1);
  EXPECT_EQ(run.success_probability, 1);
  std::map<std::int64_t, std::pair<Rational, Rational>> labels;
  for (const auto& [label, amp] : run.final_state.terms()) {
    EXPECT_TRUE(label.garbage().empty());
    labels[label.integer("i")] = {label.rational("s"), label.rational("f_star")};
  }
  std::vector<Rational> s{frac(-1, 2), frac(-1, 4), frac(1, 4), frac(3, 4), 1};
  std::vector<Rational> v{frac(-1, 2), frac(-7, 16), frac(-1, 4), frac(1, 16), frac(1, 4)};
  for (std::int64_t i = 0; i < 5; ++i) {
    EXPECT_EQ(labels[i].first, s[i]);
    EXPECT_EQ(labels[i].second, v[i]);
  }
}

TEST(AdaptiveRun, ConstantFunction) {
  auto run = run_qlft_1d_adaptive(unit_samples({1, 1, 1, 1}));
  for (const auto& [label, amp] : run.final_state.terms()) {
    EXPECT_EQ(label.rational("s"), 0);
    EXPECT_EQ(label.rational("f_star"), -1);
  }
}

TEST(AdaptiveRun, RandomInstancesMatchAlgorithm) {
  Rng rng(21);
  for (int it = 0; it < 30; ++it) {
    auto f = random_convex_1d(rng, std::size_t{1} << uniform_int(rng, 1, 5));
    auto run = run_qlft_1d_adaptive(f);
    EXPECT_TRUE(run.verified());
  }
}

TEST(NdRegularRun, SeparableAcceptsEveryPass) {
  // x0^2 + 2 x1^2 has evenly spaced gradients on every line
  QuadraticForm q{{{1, 0}, {0, 2}}, {0, 0}};
  auto f = sample_quadratic(q, unit_tensor_grid({4, 4}));
  auto run = run_qlft_nd_regular(f, {4, 4}, 17);
  for (const auto& p : run.pass_acceptance) EXPECT_EQ(p, 1);
  EXPECT_TRUE(run.verified());
  EXPECT_EQ(run.final_state.norm(), 1);
}

TEST(NdRegularRun, OneDimensionMatchesOneDimensionalRun) {
  auto f = ex1_four();
  auto nd = run_qlft_nd_regular(TensorSamples(TensorGrid({f.grid()}), f.samples()), {4}, 3);
  auto one = run_qlft_1d_regular(f, 4, 3);
  EXPECT_TRUE(nd.verified());
  EXPECT_EQ(nd.success_probability, one.success_probability);
  std::map<std::int64_t, Rational> a, b;
  for (const auto& [label, amp] : nd.final_state.terms()) a[label.integer("j0")] = label.rational("f_star");
  for (const auto& [j, v] : conjugate_labels(one.final_state)) b[j] = v;
  EXPECT_EQ(a, b);
}

TEST(NdRegularRun, ReportsOnNonseparableInstance) {
  Rng rng(6);
  auto f = sample_quadratic(random_lnat_quadratic_form(rng, 2), unit_tensor_grid({4, 4}));
  auto run = run_qlft_nd_regular(f, {4, 4}, 8);
  ASSERT_FALSE(run.verification.empty());
  EXPECT_EQ(run.verification[0].reference, "lft_nd_regular");
  EXPECT_EQ(run.pass_axis, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(run.final_state.norm(), 1);
  for (std::size_t p = 0; p < run.pass_acceptance.size(); ++p) {
    EXPECT_GT(run.pass_acceptance[p], 0);
    EXPECT_LE(run.pass_acceptance[p], 1);
  }
  auto again = run_qlft_nd_regular(f, {4, 4}, 8);
  EXPECT_EQ(transcript_jsonl(run), transcript_jsonl(again));
}

TEST(NdAdaptiveRun, SeparableExampleSum) {
  Rng rng(2);
  auto f = random_separable(rng, {4, 8});
  auto run = run_qlft_nd_adaptive(f);
  EXPECT_EQ(run.attempts, 1);
  EXPECT_TRUE(run.verified());
  for (const auto& [label, amp] : run.final_state.terms()) EXPECT_TRUE(label.garbage().empty());
}

TEST(NdAdaptiveRun, OneDimensionMatchesOneDimensionalRun) {
  auto f = ex1_four();
  auto nd = run_qlft_nd_adaptive(TensorSamples(TensorGrid({f.grid()}), f.samples()));
  auto one = run_qlft_1d_adaptive(f);
  std::map<std::int64_t, Rational> a, b;
  for (const auto& [label, amp] : nd.final_state.terms()) a[label.integer("i0")] = label.rational("f_star");
  for (const auto& [label, amp] : one.final_state.terms()) b[label.integer("i")] = label.rational("f_star");
  EXPECT_EQ(a, b);
}

TEST(NdAdaptiveRun, QuadraticFenchelYoungPerLabel) {
  Rng rng(13);
  auto f = sample_quadratic(random_lnat_quadratic_form(rng, 2), unit_tensor_grid({4, 4}));
  auto run = run_qlft_nd_adaptive(f);
  ASSERT_FALSE(run.verification.empty());
  EXPECT_TRUE(run.verification[0].match());
  for (const auto& [label, amp] : run.final_state.terms()) {
    MultiIndex idx{static_cast<std::size_t>(label.integer("i0")),
                   static_cast<std::size_t>(label.integer("i1"))};
    auto x = f.grid().point(idx);
    Rational lhs = f.at(idx) + label.rational("f_star");
    Rational rhs = label.rational("s0") * x[0] + label.rational("s1") * x[1];
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Analog, ConstantValues) {
  QState s;
  for (std::int64_t j = 0; j < 4; ++j) {
    BasisLabel l;
    l.set("j", j).set("f_star", Rational(3));
    s.add(l, {frac(1, 4), 1});
  }
  auto r = digital_to_analog(s, 1);
  EXPECT_EQ(r.omega, 1);
  for (const auto& [label, amp] : r.state.terms()) EXPECT_EQ(amp.weight, frac(1, 4));
  EXPECT_EQ(r.attempts, 1);
}

TEST(Analog, ExampleOneOmega) {
  auto run = run_qlft_1d_regular(example_spec(Example::Ex1), 4, 1, PadPolicy::Embed);
  auto r = digital_to_analog(run.final_state, 1);
  EXPECT_EQ(r.omega, frac(15, 32));
  EXPECT_EQ(r.omega, oracle::omega({frac(-1, 2), frac(-3, 8), frac(-1, 8), frac(1, 4)}));
  // amplitudes proportional to the values, signs included
  const Rational alpha = frac(1, 4) + frac(9, 64) + frac(1, 64) + frac(1, 16);
  std::map<std::int64_t, Rational> value;
  for (const auto& [j, v] : conjugate_labels(run.final_state)) value[j] = v;
  for (const auto& [label, amp] : r.state.terms()) {
    EXPECT_FALSE(label.has("f_star"));
    const Rational& v = value[label.integer("j")];
    EXPECT_EQ(amp.weight, v * v / alpha);
    EXPECT_EQ(amp.sign, v < 0 ? -1 : 1);
  }
  EXPECT_EQ(r.state.norm(), 1);
  EXPECT_NEAR(r.expected_attempts, std::sqrt(32.0 / 15.0), 1e-12);
}

TEST(Analog, AllZeroRejected) {
  QState s;
  BasisLabel l;
  l.set("j", std::int64_t{0}).set("f_star", Rational(0));
  s.add(l, {1, 1});
  EXPECT_THROW(digital_to_analog(s, 1), AllZeroValues);
}

TEST(QState, DuplicateLabelRejected) {
  QState s;
  BasisLabel l;
  l.set("i", std::int64_t{0});
  s.add(l, {frac(1, 2), 1});
  EXPECT_THROW(s.add(l, {frac(1, 2), 1}), MalformedState);
  EXPECT_THROW(l.erase("nope"), MalformedState);
}
