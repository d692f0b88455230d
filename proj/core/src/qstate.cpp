#include "lftlab/qstate.hpp"

#include <algorithm>
#include <cstdio>

#include "lftlab/errors.hpp"

namespace lftlab {

bool is_defined(const Word& w) { return !std::holds_alternative<Undefined>(w); }

std::string to_string(const Word& w) {
  if (std::holds_alternative<Undefined>(w)) return "undef";
  if (const auto* i = std::get_if<std::int64_t>(&w)) return std::to_string(*i);
  return to_string(std::get<Rational>(w));
}

bool Register::operator<(const Register& o) const {
  if (name != o.name) return name < o.name;
  if (value.index() != o.value.index()) return value.index() < o.value.index();
  switch (value.index()) {
    case 1: return std::get<std::int64_t>(value) < std::get<std::int64_t>(o.value);
    case 2: return std::get<Rational>(value) < std::get<Rational>(o.value);
    default: return false;
  }
}

namespace {

using RegIt = std::vector<Register>::const_iterator;

RegIt find_reg(const std::vector<Register>& regs, const std::string& name) {
  return std::find_if(regs.begin(), regs.end(), [&](const Register& r) { return r.name == name; });
}

}  // namespace

bool BasisLabel::has(const std::string& name) const { return find_reg(regs_, name) != regs_.end(); }

const Word& BasisLabel::get(const std::string& name) const {
  auto it = find_reg(regs_, name);
  if (it == regs_.end()) throw MalformedState("missing register '" + name + "' in " + str());
  return it->value;
}

const Rational& BasisLabel::rational(const std::string& name) const {
  const Word& w = get(name);
  if (const auto* r = std::get_if<Rational>(&w)) return *r;
  throw MalformedState("register '" + name + "' does not hold a rational in " + str());
}

std::int64_t BasisLabel::integer(const std::string& name) const {
  const Word& w = get(name);
  if (const auto* i = std::get_if<std::int64_t>(&w)) return *i;
  throw MalformedState("register '" + name + "' does not hold an index in " + str());
}

BasisLabel& BasisLabel::set(const std::string& name, Word value) {
  auto it = std::find_if(regs_.begin(), regs_.end(), [&](const Register& r) { return r.name == name; });
  if (it == regs_.end()) {
    regs_.push_back({name, std::move(value)});
  } else {
    it->value = std::move(value);
  }
  return *this;
}

BasisLabel& BasisLabel::erase(const std::string& name) {
  auto it = find_reg(regs_, name);
  if (it == regs_.end()) throw MalformedState("cannot uncompute missing register '" + name + "'");
  regs_.erase(it);
  return *this;
}

BasisLabel& BasisLabel::to_garbage(const std::string& name) {
  auto it = find_reg(regs_, name);
  if (it == regs_.end()) throw MalformedState("cannot move missing register '" + name + "'");
  garbage_.push_back(*it);
  regs_.erase(it);
  return *this;
}

BasisLabel& BasisLabel::set_garbage(const std::string& name, Word value) {
  garbage_.push_back({name, std::move(value)});
  return *this;
}

bool BasisLabel::operator<(const BasisLabel& o) const {
  if (regs_ != o.regs_) {
    return std::lexicographical_compare(regs_.begin(), regs_.end(), o.regs_.begin(), o.regs_.end());
  }
  return std::lexicographical_compare(garbage_.begin(), garbage_.end(), o.garbage_.begin(),
                                      o.garbage_.end());
}

std::string BasisLabel::str() const {
  std::string out = "|";
  for (std::size_t k = 0; k < regs_.size(); ++k) {
    if (k) out += ",";
    out += regs_[k].name + "=" + to_string(regs_[k].value);
  }
  if (!garbage_.empty()) {
    out += ";";
    for (std::size_t k = 0; k < garbage_.size(); ++k) {
      if (k) out += ",";
      out += garbage_[k].name + "=" + to_string(garbage_[k].value);
    }
  }
  return out + ">";
}

void QState::add(BasisLabel label, Amplitude amp) {
  auto [it, inserted] = terms_.emplace(std::move(label), std::move(amp));
  if (!inserted) throw MalformedState("duplicate basis label " + it->first.str());
}

Rational QState::norm() const {
  Rational total(0);
  for (const auto& [label, amp] : terms_) total += amp.weight;
  return total;
}

std::string QState::digest() const {
  // FNV-1a over the canonical text of every term
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& [label, amp] : terms_) {
    mix(label.str());
    mix(to_string(amp.weight));
    mix(amp.sign < 0 ? "-" : "+");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lftlab
