#include <gtest/gtest.h>

#include "lftlab/fixtures.hpp"
#include "lftlab/float_lft.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/lft1d.hpp"

using namespace lftlab;

namespace {

std::pair<std::vector<double>, std::vector<double>> to_doubles(const FunctionSpec& f) {
  std::vector<double> x, v;
  for (std::size_t i = 0; i < f.size(); ++i) {
    x.push_back(to_double(f.grid().point(i)));
    v.push_back(to_double(f.sample(i)));
  }
  return {x, v};
}

}  // namespace

TEST(FloatLft, ExampleOneMatchesExact) {
  auto [x, v] = to_doubles(example_spec(Example::Ex1));
  auto r = float_lft_regular(x, v, float_regular_dual(-0.5, 1.0, 4));
  const double expected[] = {-0.5, -0.375, -0.125, 0.25};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(r.values[j], expected[j], 1e-12);
  auto a = float_lft_adaptive(x, v);
  const double adaptive[] = {-0.5, -0.4375, -0.25, 0.0625, 0.25};
  for (int j = 0; j < 5; ++j) EXPECT_NEAR(a.values[j], adaptive[j], 1e-12);
}

TEST(FloatLft, AgreesWithBruteOnRandomInstances) {
  Rng rng(3);
  for (int it = 0; it < 50; ++it) {
    auto n = static_cast<std::size_t>(uniform_int(rng, 3, 200));
    auto k = static_cast<std::size_t>(uniform_int(rng, 2, 200));
    auto [x, v] = to_doubles(random_convex_1d(rng, n));
    auto c = float_gradients(x, v);
    auto dual = float_regular_dual(c.front(), c.back(), k);
    auto fast = float_lft_regular(x, v, dual);
    auto brute = float_lft_brute(x, v, dual);
    for (std::size_t j = 0; j < k; ++j) EXPECT_NEAR(fast.values[j], brute.values[j], 1e-9);
  }
}
