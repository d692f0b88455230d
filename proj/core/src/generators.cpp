#include "lftlab/generators.hpp"

#include <algorithm>
#include <cstdlib>

#include "lftlab/errors.hpp"

namespace lftlab {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

namespace {

std::vector<Rational> convex_samples(Rng& rng, std::size_t n, const Rational& gamma) {
  std::vector<Rational> slopes;
  slopes.reserve(n - 1);
  const std::int64_t den = uniform_int(rng, 1, 8);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i > 0 && uniform_int(rng, 0, 3) == 0) {
      slopes.push_back(slopes.back());
    } else {
      slopes.push_back(make_rational(uniform_int(rng, -40, 40), den));
    }
  }
  std::sort(slopes.begin(), slopes.end());
  std::vector<Rational> f;
  f.reserve(n);
  f.push_back(make_rational(uniform_int(rng, -10, 10), uniform_int(rng, 1, 4)));
  for (const Rational& c : slopes) f.emplace_back(f.back() + gamma * c);
  return f;
}

}  // namespace

FunctionSpec random_convex_1d(Rng& rng, std::size_t n) {
  Rational x0 = make_rational(uniform_int(rng, -8, 8), uniform_int(rng, 1, 4));
  Rational gamma = make_rational(1, uniform_int(rng, 1, 6));
  RegularGrid grid(x0, gamma, n);
  return FunctionSpec(grid, convex_samples(rng, n, gamma));
}

FunctionSpec random_convex_unit(Rng& rng, std::size_t n) {
  RegularGrid grid(Rational(0), make_rational(1, static_cast<std::int64_t>(n - 1)), n);
  return FunctionSpec(grid, convex_samples(rng, n, grid.gamma_x()));
}

QuadraticForm random_lnat_quadratic_form(Rng& rng, std::size_t d, bool separable) {
  QuadraticForm q;
  q.Q.assign(d, std::vector<std::int64_t>(d, 0));
  q.b.resize(d);
  std::vector<int> sigma(d);
  for (auto& s : sigma) s = uniform_int(rng, 0, 1) ? 1 : -1;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const std::int64_t mag = separable ? 0 : uniform_int(rng, 0, 3);
      q.Q[a][b] = q.Q[b][a] = -sigma[a] * sigma[b] * mag;
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    std::int64_t off = 0;
    for (std::size_t b = 0; b < d; ++b) {
      if (b != a) off += std::llabs(q.Q[a][b]);
    }
    q.Q[a][a] = off + uniform_int(rng, separable ? 1 : 0, 3);
    q.b[a] = uniform_int(rng, -6, 6);
  }
  return q;
}

TensorSamples sample_quadratic(const QuadraticForm& q, const TensorGrid& grid) {
  const std::size_t d = grid.dims();
  if (q.Q.size() != d || q.b.size() != d) throw DegenerateGrid("quadratic rank mismatch");
  std::vector<Rational> values(grid.size());
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::vector<Rational> x = grid.point(unflatten(flat, grid.shape()));
    Rational v(0);
    for (std::size_t a = 0; a < d; ++a) {
      v += Rational(static_cast<long>(q.b[a])) * x[a];
      for (std::size_t b = 0; b < d; ++b) {
        if (q.Q[a][b] != 0) v += Rational(static_cast<long>(q.Q[a][b])) * x[a] * x[b];
      }
    }
    values[flat] = v;
  }
  return TensorSamples(grid, std::move(values));
}

TensorGrid unit_tensor_grid(const Shape& shape) {
  std::vector<RegularGrid> axes;
  for (std::size_t n : shape) {
    axes.emplace_back(Rational(0), make_rational(1, static_cast<std::int64_t>(n - 1)), n);
  }
  return TensorGrid(std::move(axes));
}

TensorGrid uniform_tensor_grid(const Shape& shape) {
  const std::size_t longest = *std::max_element(shape.begin(), shape.end());
  const Rational gamma = make_rational(1, static_cast<std::int64_t>(longest - 1));
  std::vector<RegularGrid> axes;
  for (std::size_t n : shape) axes.emplace_back(Rational(0), gamma, n);
  return TensorGrid(std::move(axes));
}

TensorSamples random_separable(Rng& rng, const Shape& shape) {
  TensorGrid grid = unit_tensor_grid(shape);
  std::vector<std::vector<Rational>> parts;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    parts.push_back(convex_samples(rng, shape[a], grid.axis(a).gamma_x()));
  }
  std::vector<Rational> values(grid.size());
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    MultiIndex idx = unflatten(flat, shape);
    Rational v(0);
    for (std::size_t a = 0; a < shape.size(); ++a) v += parts[a][idx[a]];
    values[flat] = v;
  }
  return TensorSamples(std::move(grid), std::move(values));
}

bool is_separable(const QuadraticForm& q) {
  for (std::size_t a = 0; a < q.Q.size(); ++a) {
    for (std::size_t b = 0; b < q.Q.size(); ++b) {
      if (a != b && q.Q[a][b] != 0) return false;
    }
  }
  return true;
}

}  // namespace lftlab
