#include "lftlab/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lftlab/errors.hpp"
#include "lftlab/fixtures.hpp"
#include "lftlab/generators.hpp"
#include "lftlab/hardness.hpp"

namespace lftlab::cli {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t json_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Shape json_shape(const Json& params) {
  Shape shape;
  const Json& s = require(params, "shape");
  if (!s.is_array() || s.empty()) throw ParseError("shape must be a nonempty array");
  for (const auto& v : s) shape.push_back(json_size(v, "shape entry"));
  return shape;
}

std::uint64_t json_seed(const Json& params) {
  return params.contains("seed") ? params.at("seed").get<std::uint64_t>() : 0;
}

}  // namespace

Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("rationals are written as \"p/q\" strings");
}

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"quadratic-ex1", "pwl-ex2", "pwl-ex3", "hypercube-z",
                                              "separable-sum", "random-convex-quadratic"};
  return names;
}

Json to_json(const InstanceFile& f) {
  Json j;
  j["kind"] = f.kind;
  if (f.kind == "builtin") {
    j["builtin"] = {{"name", f.builtin}, {"params", f.params}};
    return j;
  }
  Json grid = Json::array();
  for (const auto& a : f.grid) grid.push_back({{"x0", to_string(a.x0)}, {"gamma_x", to_string(a.gamma_x)}, {"n", a.n}});
  j["grid"] = grid;
  j["samples"] = rational_array(f.samples);
  if (f.closed_form) j["closed_form"] = *f.closed_form;
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  InstanceFile f;
  f.kind = require(j, "kind").get<std::string>();
  if (f.kind == "builtin") {
    const Json& b = require(j, "builtin");
    f.builtin = require(b, "name").get<std::string>();
    if (std::find(builtin_names().begin(), builtin_names().end(), f.builtin) == builtin_names().end()) {
      throw ParseError("unknown builtin '" + f.builtin + "'");
    }
    if (b.contains("params")) f.params = b.at("params");
    if (!f.params.is_object()) throw ParseError("builtin params must be an object");
    return f;
  }
  if (f.kind != "samples") throw ParseError("kind must be 'samples' or 'builtin'");
  const Json& grid = require(j, "grid");
  if (!grid.is_array() || grid.empty()) throw ParseError("grid must be a nonempty array of axes");
  std::size_t total = 1;
  for (const auto& a : grid) {
    AxisSpec axis{json_rational(require(a, "x0")), json_rational(require(a, "gamma_x")),
                  json_size(require(a, "n"), "n")};
    total *= axis.n;
    f.grid.push_back(axis);
  }
  const Json& samples = require(j, "samples");
  if (!samples.is_array()) throw ParseError("samples must be an array");
  for (const auto& v : samples) f.samples.push_back(json_rational(v));
  if (f.samples.size() != total) {
    throw ParseError("expected " + std::to_string(total) + " samples, found " + std::to_string(f.samples.size()));
  }
  if (j.contains("closed_form")) f.closed_form = j.at("closed_form").get<std::string>();
  return f;
}

std::string serialize(const InstanceFile& f) { return to_json(f).dump(2) + "\n"; }

InstanceFile parse_instance(const std::string& text) {
  try {
    return instance_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

InstanceFile samples_instance(const FunctionSpec& f) {
  InstanceFile out;
  out.grid = {{f.grid().x0(), f.grid().gamma_x(), f.size()}};
  out.samples = f.samples();
  out.closed_form = f.closed_form();
  return out;
}

InstanceFile samples_instance(const TensorSamples& f) {
  InstanceFile out;
  for (const auto& a : f.grid().axes()) out.grid.push_back({a.x0(), a.gamma_x(), a.size()});
  out.samples = f.values();
  return out;
}

TensorSamples materialize(const InstanceFile& f) {
  if (f.kind == "samples") {
    std::vector<RegularGrid> axes;
    for (const auto& a : f.grid) axes.emplace_back(a.x0, a.gamma_x, a.n);
    return TensorSamples(TensorGrid(std::move(axes)), f.samples);
  }
  const Json& p = f.params;
  try {
    if (auto e = parse_example(f.builtin)) {
      const std::size_t n = p.contains("n") ? json_size(p.at("n"), "n") : 5;
      FunctionSpec s = sample_fixture(*e, n);
      return TensorSamples(TensorGrid({s.grid()}), s.samples());
    }
    if (f.builtin == "hypercube-z") {
      Bits z = parse_bits(require(p, "z").get<std::string>());
      const bool scaled = p.contains("scaled") && p.at("scaled").get<bool>();
      auto inst = scaled ? HiddenStringInstance::sampling(z) : HiddenStringInstance::point_query(z);
      return inst.sample_all();
    }
    Rng rng(json_seed(p));
    if (f.builtin == "separable-sum") return random_separable(rng, json_shape(p));
    if (f.builtin == "random-convex-quadratic") {
      const Shape shape = json_shape(p);
      const bool separable = p.contains("separable") && p.at("separable").get<bool>();
      return sample_quadratic(random_lnat_quadratic_form(rng, shape.size(), separable), uniform_tensor_grid(shape));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad builtin params: ") + e.what());
  }
  throw ParseError("unknown builtin '" + f.builtin + "'");
}

FunctionSpec as_function(const TensorSamples& t) {
  if (t.dims() != 1) throw ParseError("this operation needs a one-dimensional instance");
  return FunctionSpec(t.grid().axis(0), t.values());
}

}  // namespace lftlab::cli
