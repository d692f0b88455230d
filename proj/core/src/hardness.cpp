#include "lftlab/hardness.hpp"

#include <algorithm>

#include "lftlab/errors.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/lftnd.hpp"
#include "lftlab/witness.hpp"

namespace lftlab {

std::string bits_to_string(const Bits& b) {
  std::string s;
  for (int v : b) s.push_back(v ? '1' : '0');
  return s;
}

Bits parse_bits(const std::string& s) {
  if (s.empty()) throw ParseError("empty bit string");
  Bits b;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError("bit string may only contain 0 and 1: '" + s + "'");
    b.push_back(ch - '0');
  }
  return b;
}

HiddenStringInstance::HiddenStringInstance(Bits z, Rational scale)
    : z_(std::move(z)), scale_(std::move(scale)) {
  if (z_.empty()) throw DegenerateGrid("hidden string needs d >= 1");
  if (z_.size() > 20) throw DimensionCap("hidden string dimension capped at 20");
}

HiddenStringInstance HiddenStringInstance::point_query(Bits z) {
  return HiddenStringInstance(std::move(z), Rational(1));
}

HiddenStringInstance HiddenStringInstance::sampling(Bits z) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, z.size());
  return HiddenStringInstance(std::move(z), Rational(scale));
}

Rational HiddenStringInstance::evaluate(const Bits& x) const {
  if (x.size() != z_.size()) throw IndexOutOfRange("vertex dimension mismatch");
  ++queries_;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != z_[i]) return scale_;
  }
  return Rational(0);
}

TensorSamples HiddenStringInstance::sample_all() const {
  std::vector<RegularGrid> axes(d(), RegularGrid(Rational(0), Rational(1), 2));
  TensorGrid grid(std::move(axes));
  std::vector<Rational> values(grid.size());
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    MultiIndex idx = unflatten(flat, grid.shape());
    values[flat] = evaluate(Bits(idx.begin(), idx.end()));
  }
  return TensorSamples(std::move(grid), std::move(values));
}

PointQueryResult recover_via_point_queries(const HiddenStringInstance& inst) {
  PointQueryResult r;
  const std::uint64_t before = inst.queries();
  for (std::size_t j = 0; j < inst.d(); ++j) {
    std::vector<Rational> e(inst.d(), Rational(0));
    e[j] = 1;
    // a fresh sweep per coordinate keeps the query accounting honest
    TensorSamples f = inst.sample_all();
    PointConjugate pc = lft_nd_brute(f, {e}, 1);
    r.conjugate_at_unit.push_back(pc.values[0]);
    r.recovered.push_back(pc.values[0] == 1 ? 1 : 0);
  }
  r.queries = inst.queries() - before;
  r.matches = r.recovered == inst.z();
  return r;
}

SamplePair sample_conjugate_pair(const HiddenStringInstance& inst, Rng& rng, bool cross_check) {
  SamplePair p;
  p.s.resize(inst.d());
  std::int64_t dot = 0;
  for (std::size_t i = 0; i < inst.d(); ++i) {
    p.s[i] = static_cast<int>(rng() >> 63);
    dot += p.s[i] * inst.z()[i];
  }
  p.value = Rational(static_cast<long>(dot));
  if (cross_check && inst.d() <= 10) {
    std::vector<Rational> s(p.s.begin(), p.s.end());
    PointConjugate pc = lft_nd_brute(inst.sample_all(), {s}, 1);
    p.brute_agrees = pc.values[0] == p.value;
  }
  return p;
}

SamplePair sample_conjugate_pair(const HiddenStringInstance& inst, std::uint64_t rng_seed,
                                 bool cross_check) {
  Rng rng(rng_seed);
  return sample_conjugate_pair(inst, rng, cross_check);
}

LinearSolve solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  LinearSolve out;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const Rational factor = A[i][c] / A[r][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= factor * A[r][k];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  out.rank = r;
  // inconsistent rows mean no solution
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return out;
  }
  if (r == cols) {
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
    out.solution = std::move(x);
  }
  return out;
}

SamplingResult recover_via_sampling(const HiddenStringInstance& inst, std::size_t t,
                                    std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  const std::size_t d = inst.d();
  SamplingResult res;
  res.equations = d + t;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t e = 0; e < res.equations; ++e) {
    SamplePair p = sample_conjugate_pair(inst, rng);
    A.emplace_back(p.s.begin(), p.s.end());
    b.push_back(p.value);
  }
  LinearSolve ls = solve_rational(std::move(A), std::move(b));
  res.rank = ls.rank;
  if (!ls.solution) return res;
  for (const Rational& v : *ls.solution) {
    if (v != 0 && v != 1) return res;
    res.recovered.push_back(v == 1 ? 1 : 0);
  }
  res.success = true;
  return res;
}

RescaleResult rescale_instance(const FunctionSpec& f, const DualGrid& dual) {
  GradientVector g = discrete_gradients(f);
  const auto& c = g.values();
  const Rational& gx = f.grid().gamma_x();
  Rational max_gap(0);
  for (std::size_t i = 1; i < c.size(); ++i) max_gap = std::max<Rational>(max_gap, c[i] - c[i - 1]);
  const Rational xi = max_gap / gx;
  if (xi == 0) throw ZeroXi("f is affine on the grid; rescaling is undefined");

  const Rational value_factor = xi * gx * gx;
  std::vector<Rational> ft;
  ft.reserve(f.size());
  for (const Rational& v : f.samples()) ft.emplace_back(v / value_factor);
  RegularGrid grid_t(Rational(f.grid().x0() / gx), Rational(1), f.size());
  FunctionSpec f_tilde(grid_t, std::move(ft));

  std::vector<Rational> st;
  st.reserve(dual.size());
  for (const Rational& s : dual.points()) st.emplace_back(s / (xi * gx));
  DualGrid dual_tilde = DualGrid::from_points(std::move(st), dual.kind());

  ConjugateResult a = lft_regular(f, dual);
  ConjugateResult b = lft_regular(f_tilde, dual_tilde);
  RescaleResult r{f_tilde, dual_tilde, xi, value_factor, 0, 0, a.values, b.values, true, true};
  for (std::size_t j = 0; j < dual.size(); ++j) {
    if (a.values[j] != value_factor * b.values[j]) r.values_exact = false;
    if (a.values[j] != xi * b.values[j]) r.literal_xi_identity = false;
  }
  if (dual.gamma_s() && *dual.gamma_s() > 0) {
    r.W = witness_params(g, dual).W;
    r.W_tilde = witness_params(discrete_gradients(f_tilde), dual_tilde).W;
  } else {
    std::vector<std::size_t> count_a(f.size(), 0), count_b(f.size(), 0);
    for (std::size_t i : a.optimizer_index) ++count_a[i];
    for (std::size_t i : b.optimizer_index) ++count_b[i];
    r.W = static_cast<std::int64_t>(*std::max_element(count_a.begin(), count_a.end()));
    r.W_tilde = static_cast<std::int64_t>(*std::max_element(count_b.begin(), count_b.end()));
  }
  return r;
}

}  // namespace lftlab
