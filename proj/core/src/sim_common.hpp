#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lftlab/generators.hpp"
#include "lftlab/qlft.hpp"
#include "lftlab/qstate.hpp"

namespace lftlab::detail {

// Measurement of one flag register: pick a label by cumulative weight in map
// order and report whether its flag reads 1.
class FlagSampler {
 public:
  FlagSampler(const QState& state, const std::string& flag) {
    double acc = 0;
    cumulative_.reserve(state.size());
    accept_.reserve(state.size());
    for (const auto& [label, amp] : state.terms()) {
      acc += amp.weight.get_d();
      cumulative_.push_back(acc);
      accept_.push_back(label.integer(flag) == 1);
    }
  }

  bool draw(Rng& rng) const {
    const double u = uniform01(rng) * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return accept_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

 private:
  std::vector<double> cumulative_;
  std::vector<char> accept_;
};

inline StepSummary summarize(const std::string& name, const QState& s,
                             std::optional<Rational> acceptance = std::nullopt) {
  return {name, s.size(), s.norm(), std::move(acceptance), s.digest()};
}

}  // namespace lftlab::detail
