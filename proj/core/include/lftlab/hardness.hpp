#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lftlab/generators.hpp"
#include "lftlab/grid.hpp"
#include "lftlab/tensor.hpp"

namespace lftlab {

using Bits = std::vector<int>;

std::string bits_to_string(const Bits& b);
Bits parse_bits(const std::string& s);

// f(x) = scale * max_i |x_i - z_i| on the vertices of {0,1}^d.
// Every evaluation is counted; an instance must not be shared across threads.
class HiddenStringInstance {
 public:
  HiddenStringInstance(Bits z, Rational scale);

  // Instance of the point-query reduction (scale 1).
  static HiddenStringInstance point_query(Bits z);
  // Instance of the sampling reduction (scale 2^d).
  static HiddenStringInstance sampling(Bits z);

  std::size_t d() const { return z_.size(); }
  const Bits& z() const { return z_; }
  const Rational& scale() const { return scale_; }
  std::uint64_t queries() const { return queries_; }

  Rational evaluate(const Bits& x) const;
  // Queries every vertex once.
  TensorSamples sample_all() const;

 private:
  Bits z_;
  Rational scale_;
  mutable std::uint64_t queries_ = 0;
};

struct PointQueryResult {
  Bits recovered;
  std::vector<Rational> conjugate_at_unit;  // f*(e_j)
  std::uint64_t queries = 0;
  bool matches = false;
};

PointQueryResult recover_via_point_queries(const HiddenStringInstance& inst);

struct SamplePair {
  Bits s;
  Rational value;
  std::optional<bool> brute_agrees;  // set when d <= 10 and checking is requested
};

SamplePair sample_conjugate_pair(const HiddenStringInstance& inst, Rng& rng,
                                 bool cross_check = false);
SamplePair sample_conjugate_pair(const HiddenStringInstance& inst, std::uint64_t rng_seed,
                                 bool cross_check = false);

struct SamplingResult {
  bool success = false;
  Bits recovered;
  std::size_t equations = 0;
  std::size_t rank = 0;
};

SamplingResult recover_via_sampling(const HiddenStringInstance& inst, std::size_t t,
                                    std::uint64_t rng_seed);

// Rank and unique solution (when full column rank) of A x = b over the rationals.
struct LinearSolve {
  std::size_t rank = 0;
  std::optional<std::vector<Rational>> solution;
};
LinearSolve solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

struct RescaleResult {
  FunctionSpec f_tilde;
  DualGrid dual_tilde;
  Rational xi;
  // f*(s_j) = value_factor * f~*(s~_j); equals xi * gamma_x^2.
  Rational value_factor;
  std::int64_t W = 0;
  std::int64_t W_tilde = 0;
  std::vector<Rational> f_star;
  std::vector<Rational> f_tilde_star;
  bool values_exact = false;
  // f*(s_j) = xi * f~*(s~_j); holds when gamma_x = 1.
  bool literal_xi_identity = false;
};

RescaleResult rescale_instance(const FunctionSpec& f, const DualGrid& dual);

}  // namespace lftlab
