#pragma once

#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/rational.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace lattice_waves {

// Finitely supported map G -> Q. Zero values are never stored, so equality of
// the underlying maps is equality of functions.
class SupportedFunction {
public:
  using Map = std::unordered_map<GroupElement, Rational, GroupElementHash>;

  SupportedFunction() = default;
  explicit SupportedFunction(GroupSpec group) : group_(std::move(group)) {}

  // Point mass c * delta_x.
  static SupportedFunction delta(const GroupSpec& g, const GroupElement& x,
                                 const Rational& c = 1);

  const GroupSpec& group() const { return group_; }
  const Map& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational operator()(const GroupElement& x) const;

  void set(const GroupElement& x, const Rational& value);
  void add(const GroupElement& x, const Rational& value);

  // Entries ordered by element, for output and deterministic iteration.
  std::vector<std::pair<GroupElement, Rational>> sorted_entries() const;

  SupportedFunction& operator+=(const SupportedFunction& other);
  SupportedFunction& operator-=(const SupportedFunction& other);
  SupportedFunction& operator*=(const Rational& c);

  friend SupportedFunction operator+(SupportedFunction a, const SupportedFunction& b) {
    return a += b;
  }
  friend SupportedFunction operator-(SupportedFunction a, const SupportedFunction& b) {
    return a -= b;
  }
  friend SupportedFunction operator*(const Rational& c, SupportedFunction a) { return a *= c; }

  friend bool operator==(const SupportedFunction& a, const SupportedFunction& b) {
    return a.group_ == b.group_ && a.entries_ == b.entries_;
  }

private:
  GroupSpec group_;
  Map entries_;
};

// f^(trivial character) = sum of all values.
Rational trivial_character_sum(const SupportedFunction& f);

// Throws GroupMismatch unless both functions live on the same group.
void require_same_group(const SupportedFunction& a, const SupportedFunction& b);

} // namespace lattice_waves
