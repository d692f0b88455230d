#include <map>
#include <string>

#include "lftlab/errors.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/lftnd.hpp"
#include "lftlab/qlft.hpp"
#include "sim_common.hpp"

namespace lftlab {

namespace {

std::string idx_name(const char* prefix, std::size_t a) { return prefix + std::to_string(a); }

// Register name of a block entry, e.g. h[-1,+0].
std::string block_name(const std::vector<int>& offsets) {
  std::string s = "h[";
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    if (k) s += ",";
    s += offsets[k] < 0 ? "-1" : offsets[k] > 0 ? "+1" : "+0";
  }
  return s + "]";
}

// All offset tuples in {-1,0,1}^len, lexicographic.
std::vector<std::vector<int>> offset_tuples(std::size_t len) {
  std::vector<std::vector<int>> out(1);
  for (std::size_t a = 0; a < len; ++a) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out) {
      for (int o : {-1, 0, 1}) {
        auto u = t;
        u.push_back(o);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> with_last(std::vector<int> r, int delta) {
  r.push_back(delta);
  return r;
}

void check_sizes(const TensorSamples& f, PadPolicy pad) {
  for (std::size_t a = 0; a < f.dims(); ++a) {
    const auto n = static_cast<std::int64_t>(f.shape()[a]);
    if (pad == PadPolicy::Strict && !is_power_of_two(n)) {
      throw NotPowerOfTwo("N_" + std::to_string(a) + " = " + std::to_string(n) +
                          " is not a power of two");
    }
  }
}

QState prepare_nd(const TensorSamples& f) {
  const std::size_t d = f.dims();
  const Shape& sh = f.shape();
  const auto cube = offset_tuples(d);
  std::vector<std::string> names;
  for (const auto& o : cube) names.push_back(block_name(o));
  QState state;
  int qubits = 0;
  for (std::size_t n : sh) qubits += ceil_log2(static_cast<std::int64_t>(n));
  state.set_index_qubits(qubits);
  const Rational w(1, static_cast<unsigned long>(f.size()));
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    MultiIndex idx = unflatten(flat, sh);
    BasisLabel l;
    for (std::size_t a = 0; a < d; ++a) l.set(idx_name("i", a), static_cast<std::int64_t>(idx[a]));
    for (std::size_t a = 0; a < d; ++a) l.set(idx_name("x", a), f.grid().axis(a).point(idx[a]));
    for (std::size_t c = 0; c < cube.size(); ++c) {
      MultiIndex nb = idx;
      bool inside = true;
      for (std::size_t a = 0; a < d && inside; ++a) {
        const long v = static_cast<long>(idx[a]) + cube[c][a];
        if (v < 0 || v >= static_cast<long>(sh[a])) inside = false;
        else nb[a] = static_cast<std::size_t>(v);
      }
      l.set(names[c], inside ? Word{f.at(nb)} : Word{Undefined{}});
    }
    state.add(std::move(l), {w, 1});
  }
  return state;
}

struct LineGradients {
  bool in_range = false;
  std::optional<Rational> c_prev;
  std::optional<Rational> c;
  Rational centre;
};

LineGradients line_at(const BasisLabel& l, const std::vector<int>& r, const Rational& gamma) {
  LineGradients g;
  const Word& mid = l.get(block_name(with_last(r, 0)));
  if (!is_defined(mid)) return g;
  g.in_range = true;
  g.centre = std::get<Rational>(mid);
  const Word& lo = l.get(block_name(with_last(r, -1)));
  const Word& hi = l.get(block_name(with_last(r, 1)));
  if (is_defined(lo)) g.c_prev = (g.centre - std::get<Rational>(lo)) / gamma;
  if (is_defined(hi)) g.c = (std::get<Rational>(hi) - g.centre) / gamma;
  return g;
}

// Rebuilds a label after the pass on axis a: registers are ordered as
// primal indices, dual indices, coordinates, dual values, block.
BasisLabel relabel(const BasisLabel& src, std::size_t a, std::size_t d, const Word& new_index,
                   const char* index_prefix, const Rational& s,
                   const std::vector<std::pair<std::string, Word>>& block) {
  BasisLabel l;
  for (std::size_t b = 0; b < a; ++b) l.set(idx_name("i", b), src.get(idx_name("i", b)));
  if (std::string(index_prefix) == "i") {
    l.set(idx_name("i", a), new_index);
    for (std::size_t b = a + 1; b < d; ++b) l.set(idx_name("i", b), src.get(idx_name("i", b)));
  } else {
    l.set(idx_name("j", a), new_index);
    for (std::size_t b = a + 1; b < d; ++b) l.set(idx_name("j", b), src.get(idx_name("j", b)));
  }
  for (std::size_t b = 0; b < a; ++b) l.set(idx_name("x", b), src.get(idx_name("x", b)));
  l.set(idx_name("s", a), s);
  for (std::size_t b = a + 1; b < d; ++b) l.set(idx_name("s", b), src.get(idx_name("s", b)));
  for (const auto& [name, w] : block) l.set(name, w);
  for (const Register& g : src.garbage()) l.set_garbage(g.name, g.value);
  return l;
}

QState finish(const QState& state, std::size_t d, const char* index_prefix) {
  QState out;
  out.set_index_qubits(state.index_qubits());
  for (const auto& [label, amp] : state.terms()) {
    BasisLabel l;
    for (std::size_t b = 0; b < d; ++b) {
      l.set(idx_name(index_prefix, b), label.get(idx_name(index_prefix, b)));
    }
    l.set("f_star", Rational(-label.rational("h[]")));
    for (std::size_t b = 0; b < d; ++b) l.set(idx_name("s", b), label.get(idx_name("s", b)));
    for (const Register& g : label.garbage()) l.set_garbage(g.name, g.value);
    out.add(std::move(l), amp);
  }
  return out;
}

VerificationReport verify_nd(const QState& state, const TensorConjugate& ref,
                             const char* index_prefix, const std::string& reference,
                             std::uint64_t seed) {
  VerificationReport rep;
  rep.reference = reference;
  rep.seed = seed;
  rep.expected = ref.values.size();
  const std::size_t d = ref.shape.size();
  std::vector<int> seen(ref.values.size(), 0);
  for (const auto& [label, amp] : state.terms()) {
    MultiIndex j(d);
    for (std::size_t b = 0; b < d; ++b) {
      j[b] = static_cast<std::size_t>(label.integer(idx_name(index_prefix, b)));
    }
    const std::size_t flat = flatten(j, ref.shape);
    if (seen[flat]++) ++rep.duplicates;
    ++rep.compared;
    bool ok = label.rational("f_star") == ref.values[flat];
    for (std::size_t b = 0; b < d && ok; ++b) {
      ok = label.rational(idx_name("s", b)) == ref.points[flat][b];
    }
    if (!ok) {
      ++rep.mismatched;
      if (rep.details.size() < 8) {
        rep.details.push_back(label.str() + " expected f*=" + to_string(ref.values[flat]));
      }
    }
  }
  for (int c : seen) {
    if (c == 0) ++rep.missing;
  }
  if (rep.mismatched || rep.missing || rep.duplicates) {
    rep.status = VerificationReport::Status::Mismatch;
  }
  return rep;
}

}  // namespace

SimRun run_qlft_nd_regular(const TensorSamples& f, const std::vector<std::size_t>& ks,
                           std::uint64_t rng_seed, PadPolicy pad) {
  check_sizes(f, pad);
  const std::size_t d = f.dims();
  if (ks.size() != d) throw InvalidK("need one dual size per axis");
  for (std::size_t a = 0; a < d; ++a) {
    if (pad == PadPolicy::Strict && !is_power_of_two(static_cast<std::int64_t>(ks[a]))) {
      throw NotPowerOfTwo("K_" + std::to_string(a) + " = " + std::to_string(ks[a]) +
                          " is not a power of two");
    }
  }
  SimRun run;
  run.rng_seed = rng_seed;
  run.duals = nd_dual_grids(f, ks);

  QState state = prepare_nd(f);
  run.step_trace.push_back(detail::summarize("prepare", state));

  std::vector<detail::FlagSampler> samplers;
  run.success_probability = 1;
  for (std::size_t a = d; a-- > 0;) {
    const DualGrid& dual = run.duals[a];
    const Rational& gamma = f.grid().axis(a).gamma_x();
    const std::size_t n = f.shape()[a];
    const auto lines = offset_tuples(a);
    const std::vector<int> centre(a, 0);

    std::vector<std::vector<std::pair<LineGradients, DualBlock>>> per_label;
    per_label.reserve(state.size());
    std::int64_t W = 0;
    for (const auto& [label, amp] : state.terms()) {
      const auto ia = static_cast<std::size_t>(label.integer(idx_name("i", a)));
      std::vector<std::pair<LineGradients, DualBlock>> row;
      row.reserve(lines.size());
      for (const auto& r : lines) {
        LineGradients g = line_at(label, r, gamma);
        DualBlock b = g.in_range ? dual_block(ia, n, g.c_prev, g.c, dual, true) : DualBlock{};
        row.emplace_back(std::move(g), b);
      }
      const std::size_t centre_pos = lines.size() / 2;
      W = std::max<std::int64_t>(W, static_cast<std::int64_t>(row[centre_pos].second.count));
      per_label.push_back(std::move(row));
    }
    if (W == 0) throw EmptyAcceptance("no label owns a dual point on axis " + std::to_string(a));
    const Rational inv_w(1, static_cast<unsigned long>(W));
    const std::string m_name = idx_name("m", a);
    const std::string flag_name = idx_name("flag", a);
    const std::string j_name = idx_name("j", a);

    QState expanded;
    expanded.set_index_qubits(state.index_qubits());
    std::size_t k = 0;
    for (const auto& [label, amp] : state.terms()) {
      const auto& row = per_label[k++];
      const DualBlock& cb = row[lines.size() / 2].second;
      for (std::int64_t m = 0; m < W; ++m) {
        bool flag = true;
        for (const auto& [g, b] : row) {
          if (g.in_range && static_cast<std::size_t>(m) >= b.count) flag = false;
        }
        BasisLabel l = label;
        l.set(m_name, m).set(flag_name, std::int64_t{flag ? 1 : 0});
        l.set(j_name, flag ? Word{static_cast<std::int64_t>(cb.first + static_cast<std::size_t>(m))}
                           : Word{Undefined{}});
        expanded.add(std::move(l), {amp.weight * inv_w, amp.sign});
      }
    }
    run.step_trace.push_back(detail::summarize("expand_indicator_axis" + std::to_string(a), expanded));

    Rational p(0);
    for (const auto& [label, amp] : expanded.terms()) {
      if (label.integer(flag_name) == 1) p += amp.weight;
    }
    if (p == 0) throw EmptyAcceptance("indicator never fires on axis " + std::to_string(a));
    samplers.emplace_back(expanded, flag_name);

    QState post;
    post.set_index_qubits(state.index_qubits());
    for (const auto& [label, amp] : expanded.terms()) {
      if (label.integer(flag_name) != 1) continue;
      const std::int64_t j = label.integer(j_name);
      const Rational& s = dual.point(static_cast<std::size_t>(j));
      const Rational& x = label.rational(idx_name("x", a));
      std::vector<std::pair<std::string, Word>> block;
      block.reserve(lines.size());
      for (const auto& r : lines) {
        const Word& v = label.get(block_name(with_last(r, 0)));
        block.emplace_back(block_name(r), is_defined(v)
                                              ? Word{Rational(std::get<Rational>(v) - s * x)}
                                              : Word{Undefined{}});
      }
      BasisLabel l = relabel(label, a, d, Word{j}, "j", s, block);
      l.set_garbage(idx_name("i", a), label.get(idx_name("i", a)))
          .set_garbage(m_name, label.get(m_name))
          .set_garbage(idx_name("xstar", a), x);
      post.add(std::move(l), {amp.weight / p, amp.sign});
    }
    run.step_trace.push_back(detail::summarize("postselect_axis" + std::to_string(a), post, p));
    run.pass_axis.push_back(a);
    run.pass_acceptance.push_back(p);
    run.pass_W.push_back(W);
    run.success_probability *= p;
    state = std::move(post);
  }
  run.W = run.pass_W.empty() ? 1 : *std::max_element(run.pass_W.begin(), run.pass_W.end());

  QState fin = finish(state, d, "j");
  run.step_trace.push_back(detail::summarize("finalize", fin));

  // a run restarts from scratch when any pass rejects
  Rng rng(rng_seed);
  run.pass_draws.assign(samplers.size(), 0);
  run.pass_successes.assign(samplers.size(), 0);
  run.attempts = 0;
  bool done = false;
  while (!done) {
    ++run.attempts;
    done = true;
    for (std::size_t p = 0; p < samplers.size(); ++p) {
      ++run.pass_draws[p];
      if (!samplers[p].draw(rng)) {
        done = false;
        break;
      }
      ++run.pass_successes[p];
    }
  }
  run.expected_aa_repetitions = expected_aa_repetitions(run.success_probability);

  run.verification.push_back(
      verify_nd(fin, lft_nd_regular(f, run.duals), "j", "lft_nd_regular", rng_seed));
  run.final_state = std::move(fin);
  return run;
}

SimRun run_qlft_nd_adaptive(const TensorSamples& f, PadPolicy pad) {
  check_sizes(f, pad);
  const std::size_t d = f.dims();
  SimRun run;
  QState state = prepare_nd(f);
  run.step_trace.push_back(detail::summarize("prepare", state));
  for (std::size_t a = d; a-- > 0;) {
    const Rational& gamma = f.grid().axis(a).gamma_x();
    const auto lines = offset_tuples(a);
    const std::vector<int> centre(a, 0);
    QState next;
    next.set_index_qubits(state.index_qubits());
    for (const auto& [label, amp] : state.terms()) {
      LineGradients g = line_at(label, centre, gamma);
      if (!g.c_prev && !g.c) throw MalformedState("axis " + std::to_string(a) + " has one point");
      const Rational& lo = g.c_prev ? *g.c_prev : *g.c;
      const Rational& hi = g.c ? *g.c : *g.c_prev;
      const Rational s = (lo + hi) / 2;
      const Rational& x = label.rational(idx_name("x", a));
      std::vector<std::pair<std::string, Word>> block;
      for (const auto& r : lines) {
        const Word& v = label.get(block_name(with_last(r, 0)));
        block.emplace_back(block_name(r), is_defined(v)
                                              ? Word{Rational(std::get<Rational>(v) - s * x)}
                                              : Word{Undefined{}});
      }
      next.add(relabel(label, a, d, label.get(idx_name("i", a)), "i", s, block), amp);
    }
    run.step_trace.push_back(detail::summarize("adaptive_axis" + std::to_string(a), next));
    state = std::move(next);
  }
  QState fin = finish(state, d, "i");
  run.step_trace.push_back(detail::summarize("finalize", fin));
  run.success_probability = 1;
  run.attempts = 1;
  run.expected_aa_repetitions = 1;

  TensorConjugate ref = lft_nd_adaptive(f);
  run.verification.push_back(verify_nd(fin, ref, "i", "lft_nd_adaptive", 0));
  if (f.size() <= kBruteCap) {
    PointConjugate brute = lft_nd_brute(f, ref.points);
    TensorConjugate bref = ref;
    bref.values = brute.values;
    run.verification.push_back(verify_nd(fin, bref, "i", "lft_nd_brute", 0));
  }
  run.final_state = std::move(fin);
  return run;
}

}  // namespace lftlab
