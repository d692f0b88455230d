#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lftlab/grid.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/rational.hpp"

namespace lftlab {

enum class Example { Ex1, Ex2, Ex3 };

struct Fixture {
  Example id;
  std::string name;  // builtin name used by instance files
  ConjugateEvaluator f;
  ConjugateEvaluator conjugate;
  Rational lipschitz;
};

const Fixture& fixture(Example e);
const std::vector<Example>& all_examples();
std::optional<Example> parse_example(const std::string& key);
std::string short_name(Example e);

// Samples on the regular grid of [0, 1] with n points.
FunctionSpec sample_fixture(Example e, std::size_t n);
// The five-point instance used throughout the examples.
inline FunctionSpec example_spec(Example e) { return sample_fixture(e, 5); }

}  // namespace lftlab
