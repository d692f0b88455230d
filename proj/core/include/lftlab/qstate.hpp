#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lftlab/rational.hpp"

namespace lftlab {

// Tagged boundary word; never compares equal to a number.
struct Undefined {
  bool operator==(const Undefined&) const { return true; }
  bool operator<(const Undefined&) const { return false; }
};

using Word = std::variant<Undefined, std::int64_t, Rational>;

bool is_defined(const Word& w);
std::string to_string(const Word& w);

struct Register {
  std::string name;
  Word value;

  bool operator==(const Register& o) const { return name == o.name && value == o.value; }
  bool operator<(const Register& o) const;
};

// Ordered named registers plus a separate garbage section.
class BasisLabel {
 public:
  BasisLabel() = default;

  const std::vector<Register>& registers() const { return regs_; }
  const std::vector<Register>& garbage() const { return garbage_; }

  bool has(const std::string& name) const;
  const Word& get(const std::string& name) const;
  const Rational& rational(const std::string& name) const;
  std::int64_t integer(const std::string& name) const;

  // Appends when absent, replaces in place otherwise.
  BasisLabel& set(const std::string& name, Word value);
  // Uncomputes a register; throws MalformedState when absent.
  BasisLabel& erase(const std::string& name);
  BasisLabel& to_garbage(const std::string& name);
  BasisLabel& set_garbage(const std::string& name, Word value);
  void clear_garbage() { garbage_.clear(); }

  bool operator==(const BasisLabel& o) const { return regs_ == o.regs_ && garbage_ == o.garbage_; }
  bool operator<(const BasisLabel& o) const;

  // Comparison on the main section only.
  bool same_registers(const BasisLabel& o) const { return regs_ == o.regs_; }

  std::string str() const;

 private:
  std::vector<Register> regs_;
  std::vector<Register> garbage_;
};

// Exact amplitude stored as squared modulus and sign.
struct Amplitude {
  Rational weight;
  int sign = 1;

  bool operator==(const Amplitude& o) const { return weight == o.weight && sign == o.sign; }
};

class QState {
 public:
  using Terms = std::map<BasisLabel, Amplitude>;

  // Throws MalformedState on a duplicate label.
  void add(BasisLabel label, Amplitude amp);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Rational norm() const;

  int index_qubits() const { return index_qubits_; }
  void set_index_qubits(int q) { index_qubits_ = q; }

  std::string digest() const;

  bool operator==(const QState& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
  int index_qubits_ = 0;
};

}  // namespace lftlab
