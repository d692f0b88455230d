#pragma once

#include <cstddef>
#include <vector>

namespace lftlab {

// Double-precision mode for large instances. Comparisons use an absolute
// tolerance; ties within tolerance resolve to the lower interval.
struct FloatOptions {
  double tolerance = 1e-9;
};

struct FloatConjugate {
  std::vector<double> dual;
  std::vector<double> values;
  std::vector<std::size_t> optimizer_index;
};

std::vector<double> float_gradients(const std::vector<double>& x, const std::vector<double>& f,
                                    const FloatOptions& opt = {});

FloatConjugate float_lft_regular(const std::vector<double>& x, const std::vector<double>& f,
                                 const std::vector<double>& dual, const FloatOptions& opt = {});

FloatConjugate float_lft_adaptive(const std::vector<double>& x, const std::vector<double>& f,
                                  const FloatOptions& opt = {});

FloatConjugate float_lft_brute(const std::vector<double>& x, const std::vector<double>& f,
                               const std::vector<double>& dual);

std::vector<double> float_regular_dual(double lo, double hi, std::size_t k);

}  // namespace lftlab
