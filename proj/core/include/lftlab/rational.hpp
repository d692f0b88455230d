#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lftlab {

using Rational = mpq_class;

// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& r);

// Accepts "p/q", "p", "-p/q" and plain decimals such as "0.125" or "-1e-3".
Rational parse_rational(std::string_view text);

std::int64_t floor_to_int(const Rational& r);
std::int64_t ceil_to_int(const Rational& r);
double to_double(const Rational& r);
std::string to_decimal(const Rational& r, int precision);

Rational abs(const Rational& r);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_power_of_two(std::int64_t n);
int ceil_log2(std::int64_t n);

}  // namespace lftlab
