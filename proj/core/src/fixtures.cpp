#include "lftlab/fixtures.hpp"

#include "lftlab/errors.hpp"

namespace lftlab {

namespace {

Rational q(long num, long den) { return make_rational(num, den); }

Rational ex1_f(const Rational& x) { return x * x - q(3, 4) * x + q(1, 2); }

Rational ex1_conj(const Rational& s) {
  if (s < q(-3, 4)) return q(-1, 2);
  if (s > q(5, 4)) return q(1, 2);
  return s * s / 4 + q(3, 8) * s - q(23, 64);
}

Rational ex2_f(const Rational& x) {
  if (x < q(1, 4)) return Rational(0);
  if (x < q(1, 2)) return x / 4 - q(1, 16);
  if (x < q(3, 4)) return x / 2 - q(3, 16);
  return q(3, 4) * x - q(6, 16);
}

Rational ex2_conj(const Rational& s) {
  if (s < 0) return Rational(0);
  if (s < q(1, 4)) return s / 4;
  if (s < q(1, 2)) return s / 2 - q(1, 16);
  if (s < q(3, 4)) return q(3, 4) * s - q(3, 16);
  return s - q(6, 16);
}

Rational ex3_f(const Rational& x) {
  if (x < q(1, 4)) return Rational(0);
  if (x < q(3, 4)) return x / 2 - q(1, 8);
  return x - q(1, 2);
}

Rational ex3_conj(const Rational& s) {
  if (s < 0) return Rational(0);
  if (s < q(1, 2)) return s / 4;
  if (s < 1) return q(3, 4) * s - q(1, 4);
  return s - q(1, 2);
}

const std::vector<Fixture>& table() {
  static const std::vector<Fixture> t = {
      {Example::Ex1, "quadratic-ex1", ex1_f, ex1_conj, q(5, 4)},
      {Example::Ex2, "pwl-ex2", ex2_f, ex2_conj, q(3, 4)},
      {Example::Ex3, "pwl-ex3", ex3_f, ex3_conj, Rational(1)},
  };
  return t;
}

}  // namespace

const Fixture& fixture(Example e) { return table().at(static_cast<std::size_t>(e)); }

const std::vector<Example>& all_examples() {
  static const std::vector<Example> v = {Example::Ex1, Example::Ex2, Example::Ex3};
  return v;
}

std::optional<Example> parse_example(const std::string& key) {
  for (const Fixture& fx : table()) {
    if (key == fx.name || key == short_name(fx.id)) return fx.id;
  }
  return std::nullopt;
}

std::string short_name(Example e) {
  switch (e) {
    case Example::Ex1: return "ex1";
    case Example::Ex2: return "ex2";
    case Example::Ex3: return "ex3";
  }
  return "ex1";
}

FunctionSpec sample_fixture(Example e, std::size_t n) {
  if (n < 2) throw DegenerateGrid("fixture needs n >= 2");
  const Fixture& fx = fixture(e);
  RegularGrid grid(Rational(0), Rational(1, static_cast<unsigned long>(n - 1)), n);
  std::vector<Rational> samples;
  samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) samples.push_back(fx.f(grid.point(i)));
  return FunctionSpec(grid, std::move(samples), fx.name);
}

}  // namespace lftlab
