#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lftlab/rational.hpp"

namespace lftlab {

// Equispaced primal grid x_i = x0 + i * gamma_x.
class RegularGrid {
 public:
  RegularGrid(Rational x0, Rational gamma_x, std::size_t n);

  const Rational& x0() const { return x0_; }
  const Rational& gamma_x() const { return gamma_x_; }
  std::size_t size() const { return n_; }
  Rational point(std::size_t i) const;
  Rational last() const { return point(n_ - 1); }

  bool operator==(const RegularGrid& other) const;

 private:
  Rational x0_;
  Rational gamma_x_;
  std::size_t n_;
};

enum class DualKind { Regular, Adaptive, Explicit };

class DualGrid {
 public:
  // Regular grid s_j = s0 + j * gamma_s.
  static DualGrid regular(Rational s0, Rational gamma_s, std::size_t k);
  // Sorted explicit points; kind records where they came from.
  static DualGrid from_points(std::vector<Rational> points, DualKind kind = DualKind::Explicit);

  DualKind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }
  const Rational& point(std::size_t j) const { return points_.at(j); }
  const std::vector<Rational>& points() const { return points_; }
  // Spacing for regular grids; empty for the other kinds.
  const std::optional<Rational>& gamma_s() const { return gamma_s_; }

  bool operator==(const DualGrid& other) const;

 private:
  DualGrid() = default;
  DualKind kind_ = DualKind::Explicit;
  std::vector<Rational> points_;
  std::optional<Rational> gamma_s_;
};

std::string to_string(DualKind kind);

// Samples of a function on a regular grid.
class FunctionSpec {
 public:
  FunctionSpec(RegularGrid grid, std::vector<Rational> samples,
               std::optional<std::string> closed_form = std::nullopt);

  const RegularGrid& grid() const { return grid_; }
  const std::vector<Rational>& samples() const { return samples_; }
  const Rational& sample(std::size_t i) const { return samples_.at(i); }
  std::size_t size() const { return samples_.size(); }
  const std::optional<std::string>& closed_form() const { return closed_form_; }

  // Index of the first interior point with a negative second difference.
  std::optional<std::size_t> first_convexity_violation() const;
  bool is_convex() const { return !first_convexity_violation().has_value(); }
  // Throws NonConvexInput naming the offending index.
  void require_convex() const;

  bool operator==(const FunctionSpec& other) const;

 private:
  RegularGrid grid_;
  std::vector<Rational> samples_;
  std::optional<std::string> closed_form_;
};

}  // namespace lftlab
