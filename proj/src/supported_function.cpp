#include "lattice_waves/supported_function.hpp"

#include "lattice_waves/error.hpp"

#include <algorithm>

namespace lattice_waves {

SupportedFunction SupportedFunction::delta(const GroupSpec& g, const GroupElement& x,
                                           const Rational& c) {
  SupportedFunction f(g);
  f.set(x, c);
  return f;
}

Rational SupportedFunction::operator()(const GroupElement& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SupportedFunction::set(const GroupElement& x, const Rational& value) {
  group_.require_conforming(x);
  if (value == 0)
    entries_.erase(x);
  else
    entries_.insert_or_assign(x, value);
}

void SupportedFunction::add(const GroupElement& x, const Rational& value) {
  if (value == 0) return;
  group_.require_conforming(x);
  auto [it, inserted] = entries_.try_emplace(x, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

std::vector<std::pair<GroupElement, Rational>> SupportedFunction::sorted_entries() const {
  std::vector<std::pair<GroupElement, Rational>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SupportedFunction& SupportedFunction::operator+=(const SupportedFunction& other) {
  require_same_group(*this, other);
  for (const auto& [x, v] : other.entries_) add(x, v);
  return *this;
}

SupportedFunction& SupportedFunction::operator-=(const SupportedFunction& other) {
  require_same_group(*this, other);
  for (const auto& [x, v] : other.entries_) add(x, -v);
  return *this;
}

SupportedFunction& SupportedFunction::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [x, v] : entries_) v *= c;
  return *this;
}

Rational trivial_character_sum(const SupportedFunction& f) {
  Rational sum = 0;
  for (const auto& [x, v] : f.entries()) sum += v;
  return sum;
}

void require_same_group(const SupportedFunction& a, const SupportedFunction& b) {
  if (!(a.group() == b.group()))
    throw Error(ErrorCode::GroupMismatch,
                "functions live on " + a.group().to_string() + " and " + b.group().to_string());
}

} // namespace lattice_waves
