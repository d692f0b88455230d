#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lftlab/grid.hpp"
#include "lftlab/tensor.hpp"

namespace lftlab::cli {

using Json = nlohmann::ordered_json;

struct AxisSpec {
  Rational x0;
  Rational gamma_x;
  std::size_t n = 0;

  bool operator==(const AxisSpec& o) const { return x0 == o.x0 && gamma_x == o.gamma_x && n == o.n; }
};

// On-disk problem description: either explicit samples on a tensor grid or
// a named builtin with parameters.
struct InstanceFile {
  std::string kind = "samples";  // samples | builtin
  std::vector<AxisSpec> grid;
  std::vector<Rational> samples;  // row-major, axis 0 slowest
  std::optional<std::string> closed_form;
  std::string builtin;
  Json params = Json::object();

  bool operator==(const InstanceFile& o) const {
    return kind == o.kind && grid == o.grid && samples == o.samples && closed_form == o.closed_form &&
           builtin == o.builtin && params == o.params;
  }
};

Json to_json(const InstanceFile& f);
InstanceFile instance_from_json(const Json& j);

std::string serialize(const InstanceFile& f);
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);

InstanceFile samples_instance(const FunctionSpec& f);
InstanceFile samples_instance(const TensorSamples& f);

// Builtins expand to samples; samples pass through.
TensorSamples materialize(const InstanceFile& f);
FunctionSpec as_function(const TensorSamples& t);

const std::vector<std::string>& builtin_names();

Json rational_array(const std::vector<Rational>& v);
Rational json_rational(const Json& j);

}  // namespace lftlab::cli
