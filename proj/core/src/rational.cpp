#include "lftlab/rational.hpp"

#include <cctype>
#include <string>

#include "lftlab/errors.hpp"

namespace lftlab {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  long exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view exp_part = s.substr(epos + 1);
    bool neg = false;
    if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
      neg = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw ParseError("bad exponent in '" + std::string(original) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (neg) exponent = -exponent;
    s = s.substr(0, epos);
  }
  std::string digits;
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("not a number: '" + std::string(original) + "'");
  }
  digits.append(int_part);
  digits.append(frac_part);
  Rational value(mpz_class(digits, 10));
  value *= pow10(exponent - static_cast<long>(frac_part.size()));
  value.canonicalize();
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }

  Rational out;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(num), 10), d);
    out.canonicalize();
  } else if (all_digits(s)) {
    out = Rational(mpz_class(std::string(s), 10));
  } else {
    out = parse_decimal(s, text);
  }
  return negative ? Rational(-out) : out;
}

std::int64_t floor_to_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

std::int64_t ceil_to_int(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

double to_double(const Rational& r) { return r.get_d(); }

std::string to_decimal(const Rational& r, int precision) {
  if (precision < 0) precision = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  Rational scaled = abs(r) * scale;
  // round half away from zero
  mpz_class q;
  Rational shifted = scaled + Rational(1, 2);
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= precision) {
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  }
  std::string out;
  if (r < 0 && q != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - static_cast<std::size_t>(precision));
  if (precision > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - static_cast<std::size_t>(precision), std::string::npos);
  }
  return out;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational out{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  out.canonicalize();
  return out;
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

int ceil_log2(std::int64_t n) {
  int bits = 0;
  while ((std::int64_t{1} << bits) < n) ++bits;
  return bits;
}

}  // namespace lftlab
