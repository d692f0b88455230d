#include "lftlab/lftnd.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "lftlab/errors.hpp"

namespace lftlab {

namespace {

struct LineLayout {
  std::size_t outer = 1;
  std::size_t inner = 1;
};

LineLayout layout(const Shape& shape, std::size_t axis) {
  LineLayout l;
  for (std::size_t a = 0; a < axis; ++a) l.outer *= shape[a];
  for (std::size_t a = axis + 1; a < shape.size(); ++a) l.inner *= shape[a];
  return l;
}

void line_gradients(const std::vector<Rational>& values, std::size_t base, std::size_t stride,
                    std::size_t n, const Rational& gamma, std::vector<Rational>& c,
                    std::size_t axis) {
  c.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c[i] = (values[base + (i + 1) * stride] - values[base + i * stride]) / gamma;
    if (i > 0 && c[i] < c[i - 1]) {
      throw NonConvexSlice("line through flat index " + std::to_string(base) +
                           " is not convex along axis " + std::to_string(axis) + " at i=" +
                           std::to_string(i));
    }
  }
}

void check_axis(const Shape& shape, std::size_t axis) {
  if (axis >= shape.size()) throw IndexOutOfRange("axis " + std::to_string(axis) + " >= rank");
  if (shape[axis] < 2) throw DegenerateGrid("axis needs at least 2 points");
}

}  // namespace

PartialTransform transform_axis(const Shape& shape, const std::vector<Rational>& values,
                                std::size_t axis, const RegularGrid& axis_grid,
                                const DualGrid& dual) {
  check_axis(shape, axis);
  const std::size_t n = shape[axis];
  const std::size_t k = dual.size();
  const LineLayout l = layout(shape, axis);
  PartialTransform out;
  out.axis = axis;
  out.shape = shape;
  out.shape[axis] = k;
  out.values.resize(l.outer * k * l.inner);
  out.argmax.resize(out.values.size());

  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = axis_grid.point(i);
  std::vector<Rational> c;
  for (std::size_t o = 0; o < l.outer; ++o) {
    for (std::size_t in = 0; in < l.inner; ++in) {
      const std::size_t base = o * n * l.inner + in;
      line_gradients(values, base, l.inner, n, axis_grid.gamma_x(), c, axis);
      std::size_t i = 0;
      for (std::size_t j = 0; j < k; ++j) {
        while (i < c.size() && c[i] < dual.point(j)) ++i;
        const std::size_t dst = (o * k + j) * l.inner + in;
        out.values[dst] = values[base + i * l.inner] - dual.point(j) * x[i];
        out.argmax[dst] = i;
      }
      if (k >= 2 && dual.point(k - 1) >= c.back()) {
        const std::size_t dst = (o * k + k - 1) * l.inner + in;
        out.values[dst] = values[base + (n - 1) * l.inner] - dual.point(k - 1) * x[n - 1];
        out.argmax[dst] = n - 1;
      }
    }
  }
  return out;
}

PartialTransform partial_transform_g(const TensorSamples& f, std::size_t axis,
                                     const DualGrid& dual_axis) {
  check_axis(f.shape(), axis);
  return transform_axis(f.shape(), f.values(), axis, f.grid().axis(axis), dual_axis);
}

std::pair<Rational, Rational> axis_bracket(const Shape& shape, const std::vector<Rational>& values,
                                           std::size_t axis, const RegularGrid& axis_grid) {
  check_axis(shape, axis);
  const std::size_t n = shape[axis];
  const LineLayout l = layout(shape, axis);
  std::vector<Rational> c;
  bool first = true;
  std::pair<Rational, Rational> br;
  for (std::size_t o = 0; o < l.outer; ++o) {
    for (std::size_t in = 0; in < l.inner; ++in) {
      line_gradients(values, o * n * l.inner + in, l.inner, n, axis_grid.gamma_x(), c, axis);
      if (first || c.front() < br.first) br.first = c.front();
      if (first || c.back() > br.second) br.second = c.back();
      first = false;
    }
  }
  return br;
}

std::vector<DualGrid> nd_dual_grids(const TensorSamples& f, const std::vector<std::size_t>& ks) {
  const std::size_t d = f.dims();
  if (ks.size() != d) throw InvalidK("need one dual size per axis");
  std::vector<DualGrid> grids(d, DualGrid::regular(Rational(0), Rational(0), 1));
  Shape shape = f.shape();
  std::vector<Rational> cur = f.values();
  for (std::size_t a = d; a-- > 0;) {
    auto br = axis_bracket(shape, cur, a, f.grid().axis(a));
    grids[a] = regular_dual_grid(br, ks[a]);
    if (a > 0) {
      PartialTransform p = transform_axis(shape, cur, a, f.grid().axis(a), grids[a]);
      shape = std::move(p.shape);
      cur = std::move(p.values);
    }
  }
  return grids;
}

std::vector<std::vector<Rational>> product_points(const std::vector<DualGrid>& duals) {
  Shape shape;
  for (const auto& g : duals) shape.push_back(g.size());
  std::vector<std::vector<Rational>> pts(shape_size(shape));
  for (std::size_t flat = 0; flat < pts.size(); ++flat) {
    MultiIndex j = unflatten(flat, shape);
    pts[flat].reserve(duals.size());
    for (std::size_t a = 0; a < duals.size(); ++a) pts[flat].push_back(duals[a].point(j[a]));
  }
  return pts;
}

TensorConjugate lft_nd_regular(const TensorSamples& f, const std::vector<DualGrid>& duals) {
  const std::size_t d = f.dims();
  if (duals.size() != d) throw InvalidK("need one dual grid per axis");
  std::vector<PartialTransform> passes(d);
  Shape shape = f.shape();
  const std::vector<Rational>* cur = &f.values();
  for (std::size_t a = d; a-- > 0;) {
    passes[a] = transform_axis(shape, *cur, a, f.grid().axis(a), duals[a]);
    shape = passes[a].shape;
    cur = &passes[a].values;
  }

  TensorConjugate out;
  out.duals = duals;
  out.shape = shape;
  out.points = product_points(duals);
  out.values.reserve(cur->size());
  for (const Rational& v : *cur) out.values.emplace_back(-v);
  out.optimizers.resize(cur->size());
  for (std::size_t flat = 0; flat < cur->size(); ++flat) {
    MultiIndex pos = unflatten(flat, shape);
    for (std::size_t a = 0; a < d; ++a) {
      // after pass a, axes < a are still primal
      pos[a] = passes[a].argmax[flatten(pos, passes[a].shape)];
    }
    out.optimizers[flat] = std::move(pos);
  }
  return out;
}

TensorConjugate lft_nd_adaptive(const TensorSamples& f) {
  const Shape& sh = f.shape();
  const Shape st = strides_of(sh);
  const std::size_t d = f.dims();
  for (std::size_t a = 0; a < d; ++a) {
    check_axis(sh, a);
    axis_bracket(sh, f.values(), a, f.grid().axis(a));  // convexity of every line
  }
  TensorConjugate out;
  out.shape = sh;
  out.points.resize(f.size());
  out.values.resize(f.size());
  out.optimizers.resize(f.size());
  const auto& v = f.values();
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    MultiIndex idx = unflatten(flat, sh);
    Rational value = -v[flat];
    auto& s = out.points[flat];
    s.reserve(d);
    for (std::size_t a = 0; a < d; ++a) {
      const Rational& gx = f.grid().axis(a).gamma_x();
      const std::size_t n = sh[a];
      std::optional<Rational> back, fwd;
      if (idx[a] > 0) back = (v[flat] - v[flat - st[a]]) / gx;
      if (idx[a] + 1 < n) fwd = (v[flat + st[a]] - v[flat]) / gx;
      const Rational& lo = back ? *back : *fwd;
      const Rational& hi = fwd ? *fwd : *back;
      s.emplace_back((lo + hi) / 2);
      value += s.back() * f.grid().axis(a).point(idx[a]);
    }
    out.values[flat] = value;
    out.optimizers[flat] = std::move(idx);
  }
  return out;
}

PointConjugate lft_nd_brute(const TensorSamples& f,
                            const std::vector<std::vector<Rational>>& dual_points,
                            unsigned threads) {
  if (f.size() > kBruteCap) {
    throw DimensionCap("brute oracle capped at " + std::to_string(kBruteCap) + " points, got " +
                       std::to_string(f.size()));
  }
  const std::size_t d = f.dims();
  const Shape& sh = f.shape();
  for (const auto& s : dual_points) {
    if (s.size() != d) throw InvalidK("dual point rank does not match samples");
  }
  PointConjugate out;
  out.points = dual_points;
  out.values.resize(dual_points.size());
  out.optimizers.resize(dual_points.size());

  auto solve = [&](std::size_t p) {
    const auto& s = dual_points[p];
    std::vector<std::vector<Rational>> term(d);
    for (std::size_t a = 0; a < d; ++a) {
      term[a].resize(sh[a]);
      for (std::size_t i = 0; i < sh[a]; ++i) term[a][i] = s[a] * f.grid().axis(a).point(i);
    }
    MultiIndex idx(d, 0);
    std::vector<Rational> prefix(d + 1);
    prefix[0] = 0;
    for (std::size_t a = 0; a < d; ++a) prefix[a + 1] = prefix[a] + term[a][0];
    Rational best, cand;
    std::size_t arg = 0;
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      cand = prefix[d] - f.values()[flat];
      if (flat == 0 || cand > best) {
        best = cand;
        arg = flat;
      }
      std::size_t a = d;
      while (a-- > 0) {
        if (++idx[a] < sh[a]) break;
        idx[a] = 0;
      }
      if (a == static_cast<std::size_t>(-1)) break;
      for (std::size_t b = a; b < d; ++b) prefix[b + 1] = prefix[b] + term[b][idx[b]];
    }
    out.values[p] = best;
    out.optimizers[p] = unflatten(arg, sh);
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, dual_points.size()));
  if (workers <= 1) {
    for (std::size_t p = 0; p < dual_points.size(); ++p) solve(p);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t p = w; p < dual_points.size(); p += workers) solve(p);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

TensorConjugate lft_nd_brute_grid(const TensorSamples& f, const std::vector<DualGrid>& duals,
                                  unsigned threads) {
  if (duals.size() != f.dims()) throw InvalidK("need one dual grid per axis");
  PointConjugate p = lft_nd_brute(f, product_points(duals), threads);
  TensorConjugate out;
  out.duals = duals;
  for (const auto& g : duals) out.shape.push_back(g.size());
  out.points = std::move(p.points);
  out.values = std::move(p.values);
  out.optimizers = std::move(p.optimizers);
  return out;
}

}  // namespace lftlab
