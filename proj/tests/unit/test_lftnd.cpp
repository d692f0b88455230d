#include <gtest/gtest.h>

#include "lftlab/errors.hpp"
#include "lftlab/fixtures.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/lftnd.hpp"
#include "oracle.hpp"

using namespace lftlab;
using oracle::frac;

namespace {

TensorSamples separable_ex1(std::size_t d) {
  auto q = example_spec(Example::Ex1);
  TensorGrid grid(std::vector<RegularGrid>(d, q.grid()));
  std::vector<Rational> values(grid.size());
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    auto idx = unflatten(flat, grid.shape());
    for (auto i : idx) values[flat] += q.sample(i);
  }
  return TensorSamples(grid, values);
}

std::vector<std::vector<Rational>> axis_points(const TensorGrid& g) {
  std::vector<std::vector<Rational>> axes;
  for (const auto& a : g.axes()) axes.push_back(oracle::grid_points(a.x0(), a.gamma_x(), a.size()));
  return axes;
}

std::vector<Rational> oracle_conjugate(const TensorSamples& f, const std::vector<DualGrid>& duals) {
  std::vector<std::vector<Rational>> dual_axes;
  for (const auto& d : duals) dual_axes.push_back(d.points());
  return oracle::conjugate_points(oracle::product(axis_points(f.grid())), f.values(),
                                  oracle::product(dual_axes));
}

}  // namespace

TEST(Tensor, RowMajorLayout) {
  Shape s{2, 3, 4};
  EXPECT_EQ(shape_size(s), 24u);
  EXPECT_EQ(strides_of(s), (Shape{12, 4, 1}));
  EXPECT_EQ(flatten({1, 2, 3}, s), 23u);
  EXPECT_EQ(unflatten(23, s), (MultiIndex{1, 2, 3}));
  for (std::size_t i = 0; i < 24; ++i) EXPECT_EQ(flatten(unflatten(i, s), s), i);
}

TEST(PartialTransform, SeparableSubtractsConjugate) {
  auto f = separable_ex1(2);
  auto q = example_spec(Example::Ex1);
  auto dual = regular_dual_grid({frac(-1, 2), 1}, 4);
  auto g = partial_transform_g(f, 1, dual);
  auto qs = lft_brute(q, dual).values;
  ASSERT_EQ(g.shape, (Shape{5, 4}));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g.values[i * 4 + j], q.sample(i) - qs[j]);
  }
}

TEST(PartialTransform, OneDimensionIsNegatedLft) {
  auto q = example_spec(Example::Ex3);
  TensorSamples f(TensorGrid({q.grid()}), q.samples());
  auto dual = regular_dual_grid({0, 1}, 5);
  auto g = partial_transform_g(f, 0, dual);
  auto ref = lft_regular(q, dual).values;
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(g.values[j], -ref[j]);
}

TEST(PartialTransform, SlicesMatchBrute) {
  Rng rng(5);
  auto form = random_lnat_quadratic_form(rng, 2);
  auto f = sample_quadratic(form, unit_tensor_grid({5, 5}));
  auto dual = DualGrid::regular(-3, frac(1, 2), 13);
  for (std::size_t axis = 0; axis < 2; ++axis) {
    auto g = partial_transform_g(f, axis, dual);
    for (std::size_t fixed = 0; fixed < 5; ++fixed) {
      std::vector<Rational> line;
      for (std::size_t t = 0; t < 5; ++t) line.push_back(axis == 0 ? f.at({t, fixed}) : f.at({fixed, t}));
      auto ref = oracle::conjugate_1d(oracle::grid_points(0, frac(1, 4), 5), line, dual.points());
      for (std::size_t j = 0; j < 13; ++j) {
        const Rational& got = axis == 0 ? g.values[j * 5 + fixed] : g.values[fixed * 13 + j];
        EXPECT_EQ(got, -ref.values[j]);
      }
    }
  }
}

TEST(PartialTransform, RejectsNonconvexSlice) {
  TensorSamples f(unit_tensor_grid({3, 3}), {0, 1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_THROW(partial_transform_g(f, 1, DualGrid::from_points({0})), NonConvexSlice);
}

TEST(LftNdRegular, SeparableExampleOne) {
  auto f = separable_ex1(2);
  auto dual = regular_dual_grid({frac(-1, 2), 1}, 4);
  auto r = lft_nd_regular(f, {dual, dual});
  std::vector<Rational> q{frac(-1, 2), frac(-3, 8), frac(-1, 8), frac(1, 4)};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(r.values[a * 4 + b], q[a] + q[b]);
  }
}

TEST(LftNdRegular, ZeroOnBinaryCube) {
  TensorSamples f(TensorGrid({RegularGrid(0, 1, 2), RegularGrid(0, 1, 2)}), {0, 0, 0, 0});
  auto d = DualGrid::from_points({0});
  auto r = lft_nd_regular(f, {d, d});
  ASSERT_EQ(r.values.size(), 1u);
  EXPECT_EQ(r.values[0], 0);
}

TEST(LftNdRegular, QuadraticMatchesOracle) {
  Rng rng(8);
  for (int it = 0; it < 5; ++it) {
    auto f = sample_quadratic(random_lnat_quadratic_form(rng, 2), unit_tensor_grid({8, 8}));
    auto duals = nd_dual_grids(f, {8, 8});
    EXPECT_EQ(lft_nd_regular(f, duals).values, oracle_conjugate(f, duals));
  }
}

TEST(LftNdRegular, AxisOrderIndependent) {
  Rng rng(9);
  auto f = sample_quadratic(random_lnat_quadratic_form(rng, 2), unit_tensor_grid({6, 6}));
  auto duals = nd_dual_grids(f, {5, 7});
  // transform axis 0 first, then axis 1
  auto first = transform_axis(f.shape(), f.values(), 0, f.grid().axis(0), duals[0]);
  std::vector<Rational> neg(first.values.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = first.values[i];
  auto second = transform_axis(first.shape, neg, 1, f.grid().axis(1), duals[1]);
  auto ref = lft_nd_regular(f, duals);
  ASSERT_EQ(second.values.size(), ref.values.size());
  for (std::size_t i = 0; i < ref.values.size(); ++i) EXPECT_EQ(-second.values[i], ref.values[i]);
}

TEST(LftNdRegular, ThreeDimensionsMatchBrute) {
  Rng rng(10);
  for (int it = 0; it < 3; ++it) {
    auto f = sample_quadratic(random_lnat_quadratic_form(rng, 3), uniform_tensor_grid({4, 5, 6}));
    auto duals = nd_dual_grids(f, {3, 4, 5});
    auto fast = lft_nd_regular(f, duals);
    auto brute = lft_nd_brute_grid(f, duals, 2);
    EXPECT_EQ(fast.values, brute.values);
    EXPECT_EQ(fast.values, oracle_conjugate(f, duals));
  }
}

TEST(LftNdAdaptive, SeparableExampleOne) {
  auto f = separable_ex1(2);
  auto r = lft_nd_adaptive(f);
  auto one = lft_adaptive(example_spec(Example::Ex1));
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      EXPECT_EQ(r.values[a * 5 + b], one.values[a] + one.values[b]);
      EXPECT_EQ(r.points[a * 5 + b], (std::vector<Rational>{one.dual.point(a), one.dual.point(b)}));
      EXPECT_EQ(r.optimizers[a * 5 + b], (MultiIndex{a, b}));
    }
  }
}

TEST(LftNdAdaptive, OneDimensionMatchesLftAdaptive) {
  auto q = example_spec(Example::Ex2);
  auto r = lft_nd_adaptive(TensorSamples(TensorGrid({q.grid()}), q.samples()));
  EXPECT_EQ(r.values, lft_adaptive(q).values);
}

TEST(LftNdAdaptive, FenchelYoungOnInteriorOfQuadratic) {
  Rng rng(12);
  auto f = sample_quadratic(random_lnat_quadratic_form(rng, 2), unit_tensor_grid({4, 4}));
  auto r = lft_nd_adaptive(f);
  auto xs = oracle::product(axis_points(f.grid()));
  for (std::size_t p = 0; p < r.values.size(); ++p) {
    const auto& s = r.points[p];
    Rational own = -f.values()[p];
    for (std::size_t a = 0; a < 2; ++a) own += s[a] * xs[p][a];
    EXPECT_EQ(r.values[p], own);
    auto idx = unflatten(p, f.shape());
    // interior points are exact maximizers; boundary one-sided gradients need not be
    if (idx[0] == 0 || idx[0] == 3 || idx[1] == 0 || idx[1] == 3) continue;
    EXPECT_EQ(r.values[p], oracle::conjugate_points(xs, f.values(), {s})[0]);
  }
}

TEST(LftNdBrute, HypercubeUnitVector) {
  std::vector<int> z{1, 0, 1};
  TensorGrid grid(std::vector<RegularGrid>(3, RegularGrid(0, 1, 2)));
  std::vector<Rational> values(8);
  for (std::size_t p = 0; p < 8; ++p) {
    auto idx = unflatten(p, grid.shape());
    int dev = 0;
    for (int a = 0; a < 3; ++a) dev = std::max(dev, std::abs(static_cast<int>(idx[a]) - z[a]));
    values[p] = dev;
  }
  auto r = lft_nd_brute(TensorSamples(grid, values), {{0, 1, 0}, {1, 0, 0}});
  EXPECT_EQ(r.values[0], 0);
  EXPECT_EQ(r.values[1], 1);
}

TEST(LftNdBrute, SinglePointGrid) {
  TensorSamples f(TensorGrid({RegularGrid(frac(1, 2), 1, 2)}), {3, 100});
  auto r = lft_nd_brute(f, {{4}});
  EXPECT_EQ(r.values[0], Rational(4) * frac(1, 2) - 3);
}

TEST(LftNdBrute, ThreadCountDoesNotChangeResult) {
  Rng rng(14);
  auto f = random_separable(rng, {6, 7});
  auto duals = nd_dual_grids(f, {9, 9});
  auto a = lft_nd_brute_grid(f, duals, 1);
  auto b = lft_nd_brute_grid(f, duals, 4);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.optimizers, b.optimizers);
}

TEST(LftNdBrute, RespectsCap) {
  TensorGrid grid(std::vector<RegularGrid>(21, RegularGrid(0, 1, 2)));
  EXPECT_THROW(lft_nd_brute(TensorSamples(grid, std::vector<Rational>(grid.size())),
                            {std::vector<Rational>(21)}),
               DimensionCap);
}

TEST(Generators, SeparableSumIsSeparable) {
  Rng rng(15);
  auto form = random_lnat_quadratic_form(rng, 3, true);
  EXPECT_TRUE(is_separable(form));
  auto f = random_separable(rng, {4, 4});
  EXPECT_TRUE(f.is_axis_convex());
}
