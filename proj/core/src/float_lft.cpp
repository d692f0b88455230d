#include "lftlab/float_lft.hpp"

#include <string>

#include "lftlab/errors.hpp"

namespace lftlab {

std::vector<double> float_gradients(const std::vector<double>& x, const std::vector<double>& f,
                                    const FloatOptions& opt) {
  if (x.size() != f.size() || x.size() < 2) throw DegenerateGrid("need matching x/f with n >= 2");
  std::vector<double> c(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) c[i] = (f[i + 1] - f[i]) / (x[i + 1] - x[i]);
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[i - 1] - opt.tolerance) {
      throw NonConvexInput("gradient decreases at i=" + std::to_string(i));
    }
  }
  return c;
}

FloatConjugate float_lft_regular(const std::vector<double>& x, const std::vector<double>& f,
                                 const std::vector<double>& dual, const FloatOptions& opt) {
  const std::vector<double> c = float_gradients(x, f, opt);
  FloatConjugate out{dual, std::vector<double>(dual.size()), std::vector<std::size_t>(dual.size())};
  std::size_t i = 0;
  for (std::size_t j = 0; j < dual.size(); ++j) {
    const double s = dual[j];
    // s <= c_i within tolerance stays in interval i
    while (i < c.size() && c[i] < s - opt.tolerance) ++i;
    out.optimizer_index[j] = i;
    out.values[j] = s * x[i] - f[i];
  }
  return out;
}

FloatConjugate float_lft_adaptive(const std::vector<double>& x, const std::vector<double>& f,
                                  const FloatOptions& opt) {
  const std::vector<double> c = float_gradients(x, f, opt);
  const std::size_t n = x.size();
  FloatConjugate out{std::vector<double>(n), std::vector<double>(n), std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = i == 0 ? c.front() : c[i - 1];
    const double hi = i + 1 == n ? c.back() : c[i];
    out.dual[i] = 0.5 * (lo + hi);
    out.values[i] = out.dual[i] * x[i] - f[i];
    out.optimizer_index[i] = i;
  }
  return out;
}

FloatConjugate float_lft_brute(const std::vector<double>& x, const std::vector<double>& f,
                               const std::vector<double>& dual) {
  FloatConjugate out{dual, std::vector<double>(dual.size()), std::vector<std::size_t>(dual.size())};
  for (std::size_t j = 0; j < dual.size(); ++j) {
    double best = dual[j] * x[0] - f[0];
    std::size_t arg = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
      const double v = dual[j] * x[i] - f[i];
      if (v > best) {
        best = v;
        arg = i;
      }
    }
    out.values[j] = best;
    out.optimizer_index[j] = arg;
  }
  return out;
}

std::vector<double> float_regular_dual(double lo, double hi, std::size_t k) {
  if (k < 2) throw InvalidK("regular dual grid needs k >= 2");
  std::vector<double> s(k);
  for (std::size_t j = 0; j < k; ++j) {
    s[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(k - 1);
  }
  s.back() = hi;
  return s;
}

}  // namespace lftlab
