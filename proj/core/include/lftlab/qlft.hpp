#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/qstate.hpp"
#include "lftlab/tensor.hpp"

namespace lftlab {

enum class PadPolicy {
  // Sizes must be powers of two.
  Strict,
  // N items sit in a ceil(log2 N)-qubit register; only valid indices are populated.
  Embed,
};

struct StepSummary {
  std::string name;
  std::size_t labels = 0;
  Rational norm;
  std::optional<Rational> acceptance;
  std::string digest;
};

struct VerificationReport {
  enum class Status { Match, Mismatch };

  std::string reference;
  Status status = Status::Match;
  std::size_t expected = 0;
  std::size_t compared = 0;
  std::size_t mismatched = 0;
  std::size_t missing = 0;
  std::size_t duplicates = 0;
  std::vector<std::string> details;
  std::uint64_t seed = 0;

  bool match() const { return status == Status::Match; }
};

const char* to_string(VerificationReport::Status s);

struct PostselectOutcome {
  std::int64_t W = 0;
  Rational success_probability;
  std::int64_t attempts = 0;
  std::vector<StepSummary> steps;
};

struct SimRun {
  QState final_state;
  Rational success_probability;
  std::int64_t attempts = 1;
  double expected_aa_repetitions = 1.0;
  std::uint64_t rng_seed = 0;
  std::int64_t W = 1;
  std::vector<StepSummary> step_trace;
  std::vector<DualGrid> duals;
  // Multidimensional runs, listed in pass order (last axis first).
  std::vector<std::size_t> pass_axis;
  std::vector<Rational> pass_acceptance;
  std::vector<std::int64_t> pass_W;
  std::vector<std::int64_t> pass_draws;
  std::vector<std::int64_t> pass_successes;
  std::vector<VerificationReport> verification;

  bool verified() const;
};

// ceil((pi/4) * sqrt(1/p)).
double expected_aa_repetitions(const Rational& p);

QState prepare_superposition(const FunctionSpec& f, PadPolicy pad = PadPolicy::Strict);

QState attach_gradients(const QState& state, const Rational& epsilon = Rational(1));

std::pair<QState, PostselectOutcome> indicator_postselect(const QState& state,
                                                          const DualGrid& dual,
                                                          std::uint64_t rng_seed);

QState finalize_conjugate(const QState& state, const DualGrid& dual);

SimRun run_qlft_1d_regular(const FunctionSpec& f, std::size_t k, std::uint64_t rng_seed,
                           PadPolicy pad = PadPolicy::Strict);
SimRun run_qlft_1d_regular(const FunctionSpec& f, const DualGrid& dual, std::uint64_t rng_seed,
                           PadPolicy pad = PadPolicy::Strict);

SimRun run_qlft_1d_adaptive(const FunctionSpec& f, PadPolicy pad = PadPolicy::Strict);

SimRun run_qlft_nd_regular(const TensorSamples& f, const std::vector<std::size_t>& ks,
                           std::uint64_t rng_seed, PadPolicy pad = PadPolicy::Strict);

SimRun run_qlft_nd_adaptive(const TensorSamples& f, PadPolicy pad = PadPolicy::Strict);

struct AnalogResult {
  QState state;
  Rational omega;
  double expected_attempts = 1.0;
  std::int64_t attempts = 1;
};

// (1/K) sum_j (v_j / max |v|)^2.
Rational omega_of_values(const std::vector<Rational>& values);

AnalogResult digital_to_analog(const QState& state, std::uint64_t rng_seed,
                               const std::string& value_register = "f_star");

// Value register per dual index of a finished 1D run, in label order.
std::vector<std::pair<std::int64_t, Rational>> conjugate_labels(const QState& state);

// One JSON object per line: each step, then a summary record.
std::string transcript_jsonl(const SimRun& run);

}  // namespace lftlab
