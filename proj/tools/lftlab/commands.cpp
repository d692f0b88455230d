#include "lftlab/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lftlab/errors.hpp"
#include "lftlab/fixtures.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/hardness.hpp"
#include "lftlab/instance.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/lftnd.hpp"
#include "lftlab/qlft.hpp"
#include "lftlab/witness.hpp"

namespace lftlab::cli {

namespace {

constexpr int kExitParse = 1;
constexpr int kExitRejected = 2;
constexpr std::size_t kHardnessMaxD = 16;

struct Global {
  std::string format = "json";
  std::string out;
  std::optional<int> precision;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  Json doc;
  Table table;
};

std::string cell(const Rational& r, const Global& g) {
  return g.precision ? to_decimal(r, *g.precision) : to_string(r);
}

Json decimals(const std::vector<Rational>& v, int precision) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_decimal(r, precision));
  return a;
}

std::string render_csv(const Table& t) {
  std::ostringstream s;
  for (std::size_t i = 0; i < t.header.size(); ++i) s << (i ? "," : "") << t.header[i];
  s << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
    s << '\n';
  }
  return s.str();
}

void emit(const Result& r, const Global& g, std::ostream& out) {
  const std::string text = g.format == "csv" ? render_csv(r.table) : r.doc.dump(2) + "\n";
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + g.out);
  f << text;
}

Json report_json(const VerificationReport& v) {
  Json details = Json::array();
  for (const auto& d : v.details) details.push_back(d);
  return {{"reference", v.reference}, {"status", to_string(v.status)},      {"expected", v.expected},
          {"compared", v.compared},   {"mismatched", v.mismatched},         {"missing", v.missing},
          {"duplicates", v.duplicates}, {"seed", v.seed},                   {"details", details}};
}

Json size_array(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

// ---- dual specifications

struct DualSpec {
  enum class Kind { Regular, Adaptive, Explicit } kind = Kind::Regular;
  std::vector<std::size_t> ks;  // empty: one point per primal point
  AdaptiveVariant variant = AdaptiveVariant::Centered;
  std::vector<Rational> points;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> ks;
  std::stringstream s(text);
  std::string part;
  while (std::getline(s, part, 'x')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      ks.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ParseError("bad dual size '" + part + "'");
    }
  }
  if (ks.empty()) throw ParseError("empty dual size");
  return ks;
}

DualSpec parse_dual(const std::string& text) {
  DualSpec d;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "regular") {
    if (!tail.empty()) d.ks = parse_sizes(tail);
  } else if (head == "adaptive") {
    d.kind = DualSpec::Kind::Adaptive;
    if (!tail.empty()) {
      auto v = parse_adaptive_variant(tail);
      if (!v) throw ParseError("adaptive variant must be centered, right or left");
      d.variant = *v;
    }
  } else if (head == "explicit") {
    d.kind = DualSpec::Kind::Explicit;
    std::stringstream s(tail);
    std::string part;
    while (std::getline(s, part, ',')) d.points.push_back(parse_rational(part));
    if (d.points.empty()) throw ParseError("explicit dual list is empty");
  } else {
    throw ParseError("dual must be regular:K, adaptive:VARIANT or explicit:s0,s1,...");
  }
  return d;
}

std::vector<std::size_t> per_axis(const std::vector<std::size_t>& ks, const Shape& shape) {
  if (ks.empty()) return shape;
  if (ks.size() == 1) return std::vector<std::size_t>(shape.size(), ks[0]);
  if (ks.size() != shape.size()) throw ParseError("need one dual size per axis");
  return ks;
}

// ---- lft

Result cmd_lft(const TensorSamples& t, const DualSpec& spec, bool brute, const Global& g) {
  Result r;
  Json& doc = r.doc;
  doc["command"] = "lft";
  doc["dims"] = t.dims();
  if (t.dims() == 1) {
    FunctionSpec f = as_function(t);
    ConjugateResult c = [&] {
      switch (spec.kind) {
        case DualSpec::Kind::Adaptive:
          return lft_adaptive(f, spec.variant);
        case DualSpec::Kind::Explicit:
          return lft_regular(f, DualGrid::from_points(spec.points), RangePolicy::Clamp);
        case DualSpec::Kind::Regular:
          break;
      }
      const std::size_t k = per_axis(spec.ks, t.shape())[0];
      return lft_regular(f, regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), k));
    }();
    doc["dual_kind"] = spec.kind == DualSpec::Kind::Adaptive ? std::string("adaptive:") + to_string(spec.variant)
                                                             : to_string(c.dual.kind());
    doc["dual"] = rational_array(c.dual.points());
    doc["values"] = rational_array(c.values);
    doc["optimizer_index"] = size_array(c.optimizer_index);
    if (g.precision) {
      doc["precision"] = *g.precision;
      doc["values_decimal"] = decimals(c.values, *g.precision);
    }
    if (c.dual.gamma_s() && *c.dual.gamma_s() > 0) {
      auto w = witness_params(discrete_gradients(f), c.dual);
      doc["diagnostics"] = {{"W", w.W},
                            {"W_floor", w.W_floor},
                            {"nu", to_string(w.nu)},
                            {"success_probability", to_string(w.success_probability)}};
    }
    if (brute) {
      auto b = lft_brute(f, c.dual);
      std::size_t bad = 0;
      for (std::size_t j = 0; j < c.values.size(); ++j) bad += b.values[j] != c.values[j];
      doc["brute"] = {{"status", bad ? "MISMATCH" : "MATCH"}, {"mismatched", bad}};
    }
    r.table.header = {"j", "s", "f_star", "optimizer"};
    for (std::size_t j = 0; j < c.values.size(); ++j) {
      r.table.rows.push_back({std::to_string(j), cell(c.dual.point(j), g), cell(c.values[j], g),
                              std::to_string(c.optimizer_index[j])});
    }
    return r;
  }

  TensorConjugate c;
  if (spec.kind == DualSpec::Kind::Explicit) throw ParseError("explicit dual lists are one-dimensional only");
  if (spec.kind == DualSpec::Kind::Adaptive) {
    if (spec.variant != AdaptiveVariant::Centered) throw ParseError("multidimensional adaptive grids are centered only");
    c = lft_nd_adaptive(t);
    doc["dual_kind"] = "adaptive:centered";
  } else {
    c = lft_nd_regular(t, nd_dual_grids(t, per_axis(spec.ks, t.shape())));
    doc["dual_kind"] = "regular";
    Json duals = Json::array();
    for (const auto& d : c.duals) duals.push_back(rational_array(d.points()));
    doc["duals"] = duals;
  }
  doc["shape"] = size_array(c.shape);
  Json points = Json::array(), optimizers = Json::array();
  for (std::size_t p = 0; p < c.values.size(); ++p) {
    points.push_back(rational_array(c.points[p]));
    optimizers.push_back(size_array(c.optimizers[p]));
  }
  doc["points"] = points;
  doc["values"] = rational_array(c.values);
  doc["optimizers"] = optimizers;
  if (g.precision) {
    doc["precision"] = *g.precision;
    doc["values_decimal"] = decimals(c.values, *g.precision);
  }
  if (brute) {
    auto b = lft_nd_brute(t, c.points);
    std::size_t bad = 0;
    for (std::size_t p = 0; p < c.values.size(); ++p) bad += b.values[p] != c.values[p];
    doc["brute"] = {{"status", bad ? "MISMATCH" : "MATCH"}, {"mismatched", bad}};
  }
  for (std::size_t a = 0; a < t.dims(); ++a) r.table.header.push_back("s" + std::to_string(a));
  r.table.header.push_back("f_star");
  for (std::size_t a = 0; a < t.dims(); ++a) r.table.header.push_back("i" + std::to_string(a));
  for (std::size_t p = 0; p < c.values.size(); ++p) {
    std::vector<std::string> row;
    for (const auto& s : c.points[p]) row.push_back(cell(s, g));
    row.push_back(cell(c.values[p], g));
    for (auto i : c.optimizers[p]) row.push_back(std::to_string(i));
    r.table.rows.push_back(std::move(row));
  }
  return r;
}

// ---- qlft

struct QlftOptions {
  std::vector<std::size_t> ks;
  std::string mode = "regular";
  std::uint64_t seed = 0;
  std::int64_t trials = 1;
  std::string pad = "strict";
  bool omega = false;
  std::string transcript;
};

Result cmd_qlft(const TensorSamples& t, const QlftOptions& o, const Global& g) {
  if (o.trials < 1) throw ParseError("--trials must be at least 1");
  const PadPolicy pad = o.pad == "embed" ? PadPolicy::Embed : PadPolicy::Strict;
  const bool adaptive = o.mode == "adaptive";
  auto once = [&](std::uint64_t seed) -> SimRun {
    if (t.dims() == 1) {
      FunctionSpec f = as_function(t);
      if (adaptive) return run_qlft_1d_adaptive(f, pad);
      return run_qlft_1d_regular(f, per_axis(o.ks, t.shape())[0], seed, pad);
    }
    if (adaptive) return run_qlft_nd_adaptive(t, pad);
    return run_qlft_nd_regular(t, per_axis(o.ks, t.shape()), seed, pad);
  };

  SimRun first = once(o.seed);
  std::int64_t draws = first.attempts;
  bool all_verified = first.verified();
  std::vector<std::int64_t> pass_draws = first.pass_draws, pass_successes = first.pass_successes;
  for (std::int64_t i = 1; i < o.trials; ++i) {
    SimRun run = once(o.seed + static_cast<std::uint64_t>(i));
    draws += run.attempts;
    all_verified = all_verified && run.verified();
    for (std::size_t p = 0; p < pass_draws.size(); ++p) {
      pass_draws[p] += run.pass_draws[p];
      pass_successes[p] += run.pass_successes[p];
    }
  }

  Result r;
  Json& doc = r.doc;
  doc["command"] = "qlft";
  doc["mode"] = o.mode;
  doc["dims"] = t.dims();
  doc["seed"] = o.seed;
  doc["trials"] = o.trials;
  doc["W"] = first.W;
  doc["success_probability"] = to_string(first.success_probability);
  doc["expected_aa_repetitions"] = first.expected_aa_repetitions;
  doc["mean_attempts"] = static_cast<double>(draws) / static_cast<double>(o.trials);
  doc["empirical_acceptance"] = static_cast<double>(o.trials) / static_cast<double>(draws);
  Json passes = Json::array();
  for (std::size_t p = 0; p < first.pass_axis.size(); ++p) {
    passes.push_back({{"axis", first.pass_axis[p]},
                      {"acceptance", to_string(first.pass_acceptance[p])},
                      {"W", first.pass_W[p]},
                      {"empirical_acceptance", pass_draws[p] ? static_cast<double>(pass_successes[p]) /
                                                                   static_cast<double>(pass_draws[p])
                                                             : 1.0}});
  }
  if (!passes.empty()) doc["passes"] = passes;
  Json reports = Json::array();
  for (const auto& v : first.verification) reports.push_back(report_json(v));
  doc["verification"] = reports;
  doc["all_trials_verified"] = all_verified;

  Json labels = Json::array();
  r.table.header.clear();
  for (const auto& [label, amp] : first.final_state.terms()) {
    Json l = Json::object();
    std::vector<std::string> row;
    for (const auto& reg : label.registers()) {
      l[reg.name] = to_string(reg.value);
      row.push_back(std::holds_alternative<Rational>(reg.value) ? cell(std::get<Rational>(reg.value), g)
                                                                : to_string(reg.value));
      if (r.table.rows.empty() && r.table.header.size() < label.registers().size()) r.table.header.push_back(reg.name);
    }
    labels.push_back(l);
    r.table.rows.push_back(std::move(row));
  }
  doc["final_labels"] = labels;
  if (o.omega) {
    AnalogResult a = digital_to_analog(first.final_state, o.seed);
    doc["omega"] = {{"value", to_string(a.omega)},
                    {"decimal", to_decimal(a.omega, g.precision.value_or(6))},
                    {"expected_attempts", a.expected_attempts},
                    {"attempts", a.attempts}};
  }
  if (!o.transcript.empty()) {
    std::ofstream f(o.transcript, std::ios::binary);
    if (!f) throw ParseError("cannot write " + o.transcript);
    f << transcript_jsonl(first);
  }
  return r;
}

// ---- hardness

Bits pick_z(std::size_t d, const std::string& z, std::uint64_t seed) {
  if (d == 0) throw ParseError("--d must be at least 1");
  if (d > kHardnessMaxD) throw DimensionCap("d = " + std::to_string(d) + " exceeds the cap of 16");
  if (!z.empty()) {
    Bits b = parse_bits(z);
    if (b.size() != d) throw ParseError("--z has " + std::to_string(b.size()) + " bits but --d is " + std::to_string(d));
    return b;
  }
  Rng rng(seed);
  Bits b(d);
  for (auto& v : b) v = static_cast<int>(rng() >> 63);
  return b;
}

Result cmd_point_queries(std::size_t d, const std::string& z, std::uint64_t seed) {
  Bits bits = pick_z(d, z, seed);
  auto inst = HiddenStringInstance::point_query(bits);
  auto p = recover_via_point_queries(inst);
  Result r;
  r.doc = {{"command", "hardness point-queries"},
           {"d", d},
           {"z", bits_to_string(bits)},
           {"recovered", bits_to_string(p.recovered)},
           {"conjugate_at_unit", rational_array(p.conjugate_at_unit)},
           {"queries", p.queries},
           {"match", p.matches}};
  r.table.header = {"j", "f_star_e_j"};
  for (std::size_t j = 0; j < d; ++j) r.table.rows.push_back({std::to_string(j), to_string(p.conjugate_at_unit[j])});
  return r;
}

Result cmd_sampling(std::size_t d, std::size_t t, const std::string& z, std::uint64_t seed, std::size_t runs) {
  Bits bits = pick_z(d, z, seed);
  auto inst = HiddenStringInstance::sampling(bits);
  if (runs < 1) throw ParseError("--runs must be at least 1");
  Result r;
  r.table.header = {"seed", "success", "rank", "recovered"};
  std::size_t ok = 0;
  Json first;
  for (std::size_t i = 0; i < runs; ++i) {
    auto s = recover_via_sampling(inst, t, seed + i);
    ok += s.success;
    if (i == 0) {
      first = {{"success", s.success},
               {"recovered", s.success ? Json(bits_to_string(s.recovered)) : Json(nullptr)},
               {"equations", s.equations},
               {"rank", s.rank}};
    }
    r.table.rows.push_back({std::to_string(seed + i), s.success ? "1" : "0", std::to_string(s.rank),
                            s.success ? bits_to_string(s.recovered) : ""});
  }
  r.doc = {{"command", "hardness sampling"}, {"d", d}, {"t", t}, {"z", bits_to_string(bits)}, {"seed", seed}};
  r.doc["first_run"] = first;
  r.doc["runs"] = runs;
  r.doc["successes"] = ok;
  r.doc["success_rate"] = static_cast<double>(ok) / static_cast<double>(runs);
  r.doc["bound"] = 1.0 - std::ldexp(1.0, -static_cast<int>(t));
  return r;
}

Result cmd_rescale(const TensorSamples& t, const std::vector<std::size_t>& ks, const Global& g) {
  FunctionSpec f = as_function(t);
  const std::size_t k = per_axis(ks, t.shape())[0];
  auto dual = regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), k);
  auto m = rescale_instance(f, dual);
  const std::string mapping = m.values_exact && m.W == m.W_tilde ? "exact" : "inexact";
  Result r;
  r.doc = {{"command", "hardness rescale"},
           {"summary", "W=" + std::to_string(m.W) + " W~=" + std::to_string(m.W_tilde) + " mapping=" + mapping},
           {"W", m.W},
           {"W_tilde", m.W_tilde},
           {"xi", to_string(m.xi)},
           {"value_factor", to_string(m.value_factor)},
           {"mapping", mapping},
           {"literal_xi_identity", m.literal_xi_identity},
           {"dual", rational_array(dual.points())},
           {"dual_tilde", rational_array(m.dual_tilde.points())},
           {"f_star", rational_array(m.f_star)},
           {"f_tilde_star", rational_array(m.f_tilde_star)},
           {"f_tilde", to_json(samples_instance(m.f_tilde))}};
  r.table.header = {"j", "s", "s_tilde", "f_star", "f_tilde_star"};
  for (std::size_t j = 0; j < dual.size(); ++j) {
    r.table.rows.push_back({std::to_string(j), cell(dual.point(j), g), cell(m.dual_tilde.point(j), g),
                            cell(m.f_star[j], g), cell(m.f_tilde_star[j], g)});
  }
  return r;
}

// ---- fixtures

std::size_t regular_size(Example e) { return e == Example::Ex1 ? 4 : 5; }

Table plot_table(const FunctionSpec& f, const ConjugateResult& c, const ConjugateEvaluator& conj, const Global& g) {
  Table t;
  t.header = {"s", "f*_discrete", "f*_continuous"};
  for (std::size_t j = 0; j < c.values.size(); ++j) {
    t.rows.push_back({cell(c.dual.point(j), g), cell(c.values[j], g), cell(conj(c.dual.point(j)), g)});
  }
  (void)f;
  return t;
}

Result cmd_fixtures(const std::string& which, const std::string& dir, bool plot, const Global& g) {
  std::vector<Example> chosen;
  if (which == "all") {
    chosen = all_examples();
  } else {
    auto e = parse_example(which);
    if (!e) throw ParseError("--which must be ex1, ex2, ex3 or all");
    chosen.push_back(*e);
  }
  std::filesystem::create_directories(dir);
  Json written = Json::array();
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = (std::filesystem::path(dir) / name).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << text;
    written.push_back(path);
  };
  for (Example e : chosen) {
    FunctionSpec f = example_spec(e);
    InstanceFile inst = samples_instance(f);
    inst.closed_form = fixture(e).name;
    write(short_name(e) + ".json", serialize(inst));
    if (!plot) continue;
    const auto& conj = fixture(e).conjugate;
    auto reg = lft_regular(f, regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), regular_size(e)));
    write(short_name(e) + "_regular.csv", render_csv(plot_table(f, reg, conj, g)));
    for (auto v : {AdaptiveVariant::Centered, AdaptiveVariant::Right, AdaptiveVariant::Left}) {
      write(short_name(e) + "_adaptive_" + to_string(v) + ".csv", render_csv(plot_table(f, lft_adaptive(f, v), conj, g)));
    }
  }
  Result r;
  r.doc = {{"command", "fixtures emit"}, {"written", written}};
  r.table.header = {"path"};
  for (const auto& p : written) r.table.rows.push_back({p.get<std::string>()});
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrete Legendre-Fenchel transforms and quantum LFT simulation", "lftlab"};
  Global g;
  int precision = -1;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write the result to PATH (a directory for fixtures emit)");
  app.add_option("--precision", precision, "Add decimal renderings with D digits")->check(CLI::Range(0, 60));
  app.require_subcommand(1);
  app.fallthrough();

  std::string instance_path;
  std::string dual_text = "regular";
  bool brute = false;
  auto* lft = app.add_subcommand("lft", "Classical discrete LFT of an instance file");
  lft->add_option("instance", instance_path, "Instance file")->required();
  lft->add_option("--dual", dual_text, "regular[:K|:K0xK1..] | adaptive:centered|right|left | explicit:s0,s1,..");
  lft->add_flag("--brute", brute, "Cross-check against brute force");

  QlftOptions q;
  std::string qsizes;
  auto* qlft = app.add_subcommand("qlft", "Simulate the quantum LFT algorithms");
  qlft->add_option("instance", instance_path, "Instance file")->required();
  qlft->add_option("--dual-size", qsizes, "K or K0xK1.. (default: one dual point per primal point)");
  qlft->add_option("--mode", q.mode)->check(CLI::IsMember({"regular", "adaptive"}));
  qlft->add_option("--seed", q.seed, "RNG seed")->envname("LFTLAB_SEED");
  qlft->add_option("--trials", q.trials, "Independent runs with seeds seed, seed+1, ...");
  qlft->add_option("--pad", q.pad, "strict: sizes must be powers of two; embed: pad the index register")
      ->check(CLI::IsMember({"strict", "embed"}));
  qlft->add_flag("--omega", q.omega, "Report the digital-analog conversion parameter");
  qlft->add_option("--transcript", q.transcript, "Write the first run's step log (JSON lines)");

  auto* hardness = app.add_subcommand("hardness", "Hidden-string reductions and rescaling");
  hardness->require_subcommand(1);
  hardness->fallthrough();
  std::size_t hd = 0, ht = 0, runs = 1;
  std::string hz;
  std::uint64_t hseed = 0;
  auto* pq = hardness->add_subcommand("point-queries", "Recover z from f*(e_j)");
  pq->add_option("--d", hd, "Dimension")->required();
  pq->add_option("--z", hz, "Hidden bit string (random from --seed when omitted)");
  pq->add_option("--seed", hseed)->envname("LFTLAB_SEED");
  auto* sm = hardness->add_subcommand("sampling", "Recover z from sampled conjugate pairs");
  sm->add_option("--d", hd, "Dimension")->required();
  sm->add_option("--t", ht, "Extra equations beyond d");
  sm->add_option("--z", hz, "Hidden bit string (random from --seed when omitted)");
  sm->add_option("--seed", hseed)->envname("LFTLAB_SEED");
  sm->add_option("--runs", runs, "Number of seeds seed, seed+1, ... to tabulate");
  std::string rsizes;
  auto* rs = hardness->add_subcommand("rescale", "Normalize an instance and compare W and f*");
  rs->add_option("instance", instance_path, "Instance file")->required();
  rs->add_option("--dual-size", rsizes, "K (default: one dual point per primal point)");

  auto* fixtures = app.add_subcommand("fixtures", "Example instances and plot data");
  fixtures->require_subcommand(1);
  fixtures->fallthrough();
  std::string which = "all";
  bool plot = false;
  auto* fx = fixtures->add_subcommand("emit", "Write instance files (and CSV plot data)");
  fx->add_option("--which", which)->check(CLI::IsMember({"ex1", "ex2", "ex3", "all"}));
  fx->add_flag("--plot-data", plot, "Also write s, f*_discrete, f*_continuous tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : kExitParse;
  }
  if (precision >= 0) g.precision = precision;

  try {
    Result r;
    if (*lft) {
      r = cmd_lft(materialize(load_instance(instance_path)), parse_dual(dual_text), brute, g);
    } else if (*qlft) {
      if (!qsizes.empty()) q.ks = parse_sizes(qsizes);
      r = cmd_qlft(materialize(load_instance(instance_path)), q, g);
    } else if (*pq) {
      r = cmd_point_queries(hd, hz, hseed);
    } else if (*sm) {
      r = cmd_sampling(hd, ht, hz, hseed, runs);
    } else if (*rs) {
      r = cmd_rescale(materialize(load_instance(instance_path)), rsizes.empty() ? std::vector<std::size_t>{} : parse_sizes(rsizes), g);
    } else if (*fx) {
      r = cmd_fixtures(which, g.out.empty() ? "fixtures" : g.out, plot, g);
      g.out.clear();
    }
    emit(r, g, out);
    return 0;
  } catch (const NonConvexInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  } catch (const NonConvexSlice& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  } catch (const NotPowerOfTwo& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  } catch (const DimensionCap& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace lftlab::cli
