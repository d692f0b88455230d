#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "lftlab/errors.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/qlft.hpp"
#include "sim_common.hpp"

namespace lftlab {

const char* to_string(VerificationReport::Status s) {
  return s == VerificationReport::Status::Match ? "MATCH" : "MISMATCH";
}

bool SimRun::verified() const {
  for (const auto& v : verification) {
    if (!v.match()) return false;
  }
  return true;
}

double expected_aa_repetitions(const Rational& p) {
  if (p <= 0) throw EmptyAcceptance("acceptance probability must be positive");
  return std::ceil(std::numbers::pi / 4.0 * std::sqrt(1.0 / p.get_d()));
}

namespace {

void check_size(std::size_t n, PadPolicy pad, const char* what) {
  if (pad == PadPolicy::Strict && !is_power_of_two(static_cast<std::int64_t>(n))) {
    throw NotPowerOfTwo(std::string(what) + " = " + std::to_string(n) + " is not a power of two");
  }
}

Rational weight_of(std::size_t n) { return Rational(1, static_cast<unsigned long>(n)); }

std::optional<Rational> quotient(const Word& lo_f, const Word& hi_f, const Word& lo_x,
                                 const Word& hi_x) {
  if (!is_defined(lo_f) || !is_defined(hi_f)) return std::nullopt;
  return Rational((std::get<Rational>(hi_f) - std::get<Rational>(lo_f)) /
                  (std::get<Rational>(hi_x) - std::get<Rational>(lo_x)));
}

}  // namespace

QState prepare_superposition(const FunctionSpec& f, PadPolicy pad) {
  f.require_convex();
  const std::size_t n = f.size();
  check_size(n, pad, "N");
  QState state;
  state.set_index_qubits(ceil_log2(static_cast<std::int64_t>(n)));
  const Rational w = weight_of(n);
  auto word_x = [&](long i) -> Word {
    if (i < 0 || i >= static_cast<long>(n)) return Undefined{};
    return f.grid().point(static_cast<std::size_t>(i));
  };
  auto word_f = [&](long i) -> Word {
    if (i < 0 || i >= static_cast<long>(n)) return Undefined{};
    return f.sample(static_cast<std::size_t>(i));
  };
  for (long i = 0; i < static_cast<long>(n); ++i) {
    BasisLabel l;
    l.set("i", std::int64_t{i})
        .set("x_prev", word_x(i - 1))
        .set("x", word_x(i))
        .set("x_next", word_x(i + 1))
        .set("f_prev", word_f(i - 1))
        .set("f", word_f(i))
        .set("f_next", word_f(i + 1));
    state.add(std::move(l), {w, 1});
  }
  return state;
}

QState attach_gradients(const QState& state, const Rational& epsilon) {
  if (epsilon <= 0) throw InvalidK("epsilon must be positive");
  QState out;
  out.set_index_qubits(state.index_qubits());
  for (const auto& [label, amp] : state.terms()) {
    auto c_prev = quotient(label.get("f_prev"), label.get("f"), label.get("x_prev"), label.get("x"));
    auto c = quotient(label.get("f"), label.get("f_next"), label.get("x"), label.get("x_next"));
    if (!c_prev && !c) throw MalformedState("label has no neighbours: " + label.str());
    if (!c_prev) c_prev = *c - epsilon;
    if (!c) c = *c_prev + epsilon;
    BasisLabel l = label;
    l.set("c_prev", *c_prev).set("c", *c);
    out.add(std::move(l), amp);
  }
  return out;
}

std::pair<QState, PostselectOutcome> indicator_postselect(const QState& state,
                                                          const DualGrid& dual,
                                                          std::uint64_t rng_seed) {
  const std::size_t n = state.size();
  if (n < 2) throw MalformedState("need at least two labels");
  std::optional<Rational> c_first, c_last;
  for (const auto& [label, amp] : state.terms()) {
    const auto i = label.integer("i");
    if (i == 0) c_first = label.rational("c");
    if (i + 1 == static_cast<std::int64_t>(n)) c_last = label.rational("c_prev");
  }
  if (!c_first || !c_last) throw MalformedState("boundary labels missing");
  for (std::size_t j = 0; j < dual.size(); ++j) {
    if (dual.point(j) < *c_first || dual.point(j) > *c_last) {
      throw OutOfRangeDual("s_" + std::to_string(j) + " outside the nontrivial range");
    }
  }
  const bool pin = dual.size() >= 2 && dual.points().back() >= *c_last;

  PostselectOutcome outcome;
  std::map<BasisLabel, DualBlock> blocks;
  for (const auto& [label, amp] : state.terms()) {
    DualBlock b = dual_block(static_cast<std::size_t>(label.integer("i")), n,
                             label.rational("c_prev"), label.rational("c"), dual, pin);
    outcome.W = std::max<std::int64_t>(outcome.W, static_cast<std::int64_t>(b.count));
    blocks.emplace(label, b);
  }
  if (outcome.W == 0) throw EmptyAcceptance("no label owns a dual point");
  const Rational inv_w(1, static_cast<unsigned long>(outcome.W));

  QState expanded;
  expanded.set_index_qubits(state.index_qubits());
  for (const auto& [label, amp] : state.terms()) {
    const DualBlock& b = blocks.at(label);
    for (std::int64_t m = 0; m < outcome.W; ++m) {
      const bool flag = static_cast<std::size_t>(m) < b.count;
      BasisLabel l = label;
      l.set("m", m).set("flag", std::int64_t{flag ? 1 : 0});
      l.set("j", flag ? Word{static_cast<std::int64_t>(b.first + static_cast<std::size_t>(m))}
                      : Word{Undefined{}});
      expanded.add(std::move(l), {amp.weight * inv_w, amp.sign});
    }
  }
  outcome.steps.push_back(detail::summarize("expand_indicator", expanded));

  QState cleaned;
  cleaned.set_index_qubits(state.index_qubits());
  for (const auto& [label, amp] : expanded.terms()) {
    BasisLabel l = label;
    for (const char* r : {"x_prev", "x_next", "f_prev", "f_next", "c_prev", "c"}) l.erase(r);
    cleaned.add(std::move(l), amp);
  }
  outcome.steps.push_back(detail::summarize("uncompute_neighbours", cleaned));

  Rational p(0);
  for (const auto& [label, amp] : cleaned.terms()) {
    if (label.integer("flag") == 1) p += amp.weight;
  }
  outcome.success_probability = p;

  Rng rng(rng_seed);
  detail::FlagSampler sampler(cleaned, "flag");
  do {
    ++outcome.attempts;
  } while (!sampler.draw(rng));

  QState post;
  post.set_index_qubits(ceil_log2(static_cast<std::int64_t>(dual.size())));
  for (const auto& [label, amp] : cleaned.terms()) {
    if (label.integer("flag") != 1) continue;
    BasisLabel l;
    l.set("j", label.get("j")).set("x_star", label.get("x")).set("f_x_star", label.get("f"));
    l.set_garbage("m", label.get("m")).set_garbage("i", label.get("i"));
    post.add(std::move(l), {amp.weight / p, amp.sign});
  }
  outcome.steps.push_back(detail::summarize("postselect", post, p));
  return {std::move(post), std::move(outcome)};
}

QState finalize_conjugate(const QState& state, const DualGrid& dual) {
  QState out;
  out.set_index_qubits(state.index_qubits());
  for (const auto& [label, amp] : state.terms()) {
    const std::int64_t j = label.integer("j");
    if (j < 0 || static_cast<std::size_t>(j) >= dual.size()) {
      throw MalformedState("dual index out of range in " + label.str());
    }
    const Rational& x = label.rational("x_star");
    BasisLabel l;
    l.set("j", j).set("f_star", Rational(dual.point(static_cast<std::size_t>(j)) * x -
                                          label.rational("f_x_star")));
    l.set_garbage("x_star", x);
    for (const Register& g : label.garbage()) l.set_garbage(g.name, g.value);
    out.add(std::move(l), amp);
  }
  return out;
}

std::vector<std::pair<std::int64_t, Rational>> conjugate_labels(const QState& state) {
  std::vector<std::pair<std::int64_t, Rational>> out;
  out.reserve(state.size());
  for (const auto& [label, amp] : state.terms()) {
    const std::string key = label.has("j") ? "j" : "i";
    out.emplace_back(label.integer(key), label.rational("f_star"));
  }
  return out;
}

namespace {

VerificationReport verify_1d(const QState& state, const ConjugateResult& ref,
                             const std::string& reference, std::uint64_t seed) {
  VerificationReport rep;
  rep.reference = reference;
  rep.seed = seed;
  rep.expected = ref.values.size();
  std::vector<int> seen(ref.values.size(), 0);
  for (const auto& [label, amp] : state.terms()) {
    const std::string key = label.has("j") ? "j" : "i";
    const std::int64_t j = label.integer(key);
    if (j < 0 || static_cast<std::size_t>(j) >= ref.values.size()) {
      ++rep.mismatched;
      rep.details.push_back("label index out of range: " + label.str());
      continue;
    }
    const auto ju = static_cast<std::size_t>(j);
    if (seen[ju]++) ++rep.duplicates;
    ++rep.compared;
    if (label.rational("f_star") != ref.values[ju]) {
      ++rep.mismatched;
      if (rep.details.size() < 8) {
        rep.details.push_back(key + "=" + std::to_string(j) + " got " +
                              to_string(label.rational("f_star")) + " expected " +
                              to_string(ref.values[ju]));
      }
    }
    if (label.has("s") && label.rational("s") != ref.dual.point(ju)) {
      ++rep.mismatched;
      rep.details.push_back("dual point differs at " + std::to_string(j));
    }
  }
  for (int c : seen) {
    if (c == 0) ++rep.missing;
  }
  if (rep.mismatched || rep.missing || rep.duplicates) rep.status = VerificationReport::Status::Mismatch;
  return rep;
}

}  // namespace

SimRun run_qlft_1d_regular(const FunctionSpec& f, std::size_t k, std::uint64_t rng_seed,
                           PadPolicy pad) {
  GradientVector g = discrete_gradients(f);
  return run_qlft_1d_regular(f, regular_dual_grid(nontrivial_dual_range(g), k), rng_seed, pad);
}

SimRun run_qlft_1d_regular(const FunctionSpec& f, const DualGrid& dual, std::uint64_t rng_seed,
                           PadPolicy pad) {
  check_size(dual.size(), pad, "K");
  SimRun run;
  run.rng_seed = rng_seed;
  run.duals = {dual};
  const Rational epsilon =
      dual.gamma_s() && *dual.gamma_s() > 0 ? *dual.gamma_s() : Rational(1);

  QState s = prepare_superposition(f, pad);
  run.step_trace.push_back(detail::summarize("prepare", s));
  s = attach_gradients(s, epsilon);
  run.step_trace.push_back(detail::summarize("attach_gradients", s));
  auto [post, outcome] = indicator_postselect(s, dual, rng_seed);
  for (auto& st : outcome.steps) run.step_trace.push_back(std::move(st));
  QState fin = finalize_conjugate(post, dual);
  run.step_trace.push_back(detail::summarize("finalize", fin));

  run.W = outcome.W;
  run.success_probability = outcome.success_probability;
  run.attempts = outcome.attempts;
  run.expected_aa_repetitions = expected_aa_repetitions(outcome.success_probability);
  run.verification.push_back(
      verify_1d(fin, lft_regular(f, dual), "lft_regular", rng_seed));
  run.final_state = std::move(fin);
  return run;
}

SimRun run_qlft_1d_adaptive(const FunctionSpec& f, PadPolicy pad) {
  SimRun run;
  QState s = prepare_superposition(f, pad);
  run.step_trace.push_back(detail::summarize("prepare", s));
  s = attach_gradients(s);
  run.step_trace.push_back(detail::summarize("attach_gradients", s));

  const auto n = static_cast<std::int64_t>(f.size());
  QState out;
  out.set_index_qubits(s.index_qubits());
  std::vector<Rational> points(f.size());
  for (const auto& [label, amp] : s.terms()) {
    const std::int64_t i = label.integer("i");
    const Rational& c_prev = label.rational("c_prev");
    const Rational& c = label.rational("c");
    // endpoints take the epsilon -> 0 limit
    Rational sv = i == 0 ? c : i + 1 == n ? c_prev : Rational((c_prev + c) / 2);
    const Rational& x = label.rational("x");
    BasisLabel l;
    l.set("i", i).set("x", x).set("s", sv).set("f_star", Rational(sv * x - label.rational("f")));
    points[static_cast<std::size_t>(i)] = sv;
    out.add(std::move(l), amp);
  }
  run.step_trace.push_back(detail::summarize("finalize", out));
  run.success_probability = 1;
  run.attempts = 1;
  run.expected_aa_repetitions = 1;
  run.duals = {DualGrid::from_points(points, DualKind::Adaptive)};
  run.verification.push_back(
      verify_1d(out, lft_adaptive(f, AdaptiveVariant::Centered), "lft_adaptive", 0));
  run.final_state = std::move(out);
  return run;
}

Rational omega_of_values(const std::vector<Rational>& values) {
  if (values.empty()) throw AllZeroValues("no values");
  Rational peak(0);
  for (const auto& v : values) peak = std::max<Rational>(peak, abs(v));
  if (peak == 0) throw AllZeroValues("every value is zero");
  Rational sum(0);
  for (const auto& v : values) sum += (v / peak) * (v / peak);
  return sum / Rational(static_cast<unsigned long>(values.size()));
}

AnalogResult digital_to_analog(const QState& state, std::uint64_t rng_seed,
                               const std::string& value_register) {
  if (state.empty()) throw MalformedState("empty state");
  const Rational& w0 = state.terms().begin()->second.weight;
  std::vector<Rational> values;
  values.reserve(state.size());
  for (const auto& [label, amp] : state.terms()) {
    if (amp.weight != w0) throw MalformedState("input amplitudes must be uniform");
    values.push_back(label.rational(value_register));
  }
  AnalogResult out;
  out.omega = omega_of_values(values);
  Rational alpha(0);
  for (const auto& v : values) alpha += v * v;
  out.state.set_index_qubits(state.index_qubits());
  std::size_t k = 0;
  for (const auto& [label, amp] : state.terms()) {
    const Rational& v = values[k++];
    if (v == 0) continue;
    BasisLabel l = label;
    l.erase(value_register);
    out.state.add(std::move(l), {v * v / alpha, v < 0 ? -amp.sign : amp.sign});
  }
  out.expected_attempts = std::sqrt(1.0 / out.omega.get_d());
  Rng rng(rng_seed);
  const double omega = out.omega.get_d();
  out.attempts = 1;
  while (uniform01(rng) >= omega) ++out.attempts;
  return out;
}

}  // namespace lftlab
