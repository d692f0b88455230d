#include "lftlab/grid.hpp"

#include <algorithm>
#include <utility>

#include "lftlab/errors.hpp"

namespace lftlab {

RegularGrid::RegularGrid(Rational x0, Rational gamma_x, std::size_t n)
    : x0_(std::move(x0)), gamma_x_(std::move(gamma_x)), n_(n) {
  if (gamma_x_ <= 0) throw DegenerateGrid("gamma_x must be positive, got " + to_string(gamma_x_));
  if (n_ < 2) throw DegenerateGrid("grid needs at least 2 points, got " + std::to_string(n_));
}

Rational RegularGrid::point(std::size_t i) const {
  return x0_ + gamma_x_ * Rational(static_cast<unsigned long>(i));
}

bool RegularGrid::operator==(const RegularGrid& other) const {
  return n_ == other.n_ && x0_ == other.x0_ && gamma_x_ == other.gamma_x_;
}

DualGrid DualGrid::regular(Rational s0, Rational gamma_s, std::size_t k) {
  if (k < 1) throw InvalidK("dual grid needs at least one point");
  if (gamma_s < 0) throw InvalidK("gamma_s must be nonnegative");
  DualGrid g;
  g.kind_ = DualKind::Regular;
  g.points_.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    g.points_.push_back(s0 + gamma_s * Rational(static_cast<unsigned long>(j)));
  }
  g.gamma_s_ = std::move(gamma_s);
  return g;
}

DualGrid DualGrid::from_points(std::vector<Rational> points, DualKind kind) {
  if (points.empty()) throw InvalidK("dual grid needs at least one point");
  if (!std::is_sorted(points.begin(), points.end())) {
    throw InvalidK("dual points must be sorted");
  }
  DualGrid g;
  g.kind_ = kind;
  g.points_ = std::move(points);
  if (kind == DualKind::Regular) {
    Rational step = g.points_.size() > 1 ? Rational(g.points_[1] - g.points_[0]) : Rational(0);
    for (std::size_t j = 1; j < g.points_.size(); ++j) {
      if (g.points_[j] - g.points_[j - 1] != step) throw InvalidK("points are not equispaced");
    }
    g.gamma_s_ = step;
  }
  return g;
}

bool DualGrid::operator==(const DualGrid& other) const {
  return kind_ == other.kind_ && points_ == other.points_;
}

std::string to_string(DualKind kind) {
  switch (kind) {
    case DualKind::Regular: return "regular";
    case DualKind::Adaptive: return "adaptive";
    case DualKind::Explicit: return "explicit";
  }
  return "explicit";
}

FunctionSpec::FunctionSpec(RegularGrid grid, std::vector<Rational> samples,
                           std::optional<std::string> closed_form)
    : grid_(std::move(grid)), samples_(std::move(samples)), closed_form_(std::move(closed_form)) {
  if (samples_.size() != grid_.size()) {
    throw DegenerateGrid("sample count " + std::to_string(samples_.size()) +
                         " does not match grid size " + std::to_string(grid_.size()));
  }
}

std::optional<std::size_t> FunctionSpec::first_convexity_violation() const {
  for (std::size_t i = 1; i + 1 < samples_.size(); ++i) {
    if (samples_[i + 1] - 2 * samples_[i] + samples_[i - 1] < 0) return i;
  }
  return std::nullopt;
}

void FunctionSpec::require_convex() const {
  if (auto bad = first_convexity_violation()) {
    throw NonConvexInput("negative second difference at i=" + std::to_string(*bad));
  }
}

bool FunctionSpec::operator==(const FunctionSpec& other) const {
  return grid_ == other.grid_ && samples_ == other.samples_ && closed_form_ == other.closed_form_;
}

}  // namespace lftlab
