#pragma once

#include "lattice_waves/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lattice_waves {

// Element of Z^rank x Z_{m_1} x ... x Z_{m_t}, stored as one coordinate
// vector: the free part first, then the torsion part. Torsion coordinates are
// always reduced into [0, m_i) by the owning GroupSpec, so equality is plain
// componentwise comparison.
class GroupElement {
public:
  GroupElement() = default;

  std::span<const std::int64_t> free() const { return {coords_.data(), rank_}; }
  std::span<const std::int64_t> torsion() const {
    return {coords_.data() + rank_, coords_.size() - rank_};
  }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t rank() const { return rank_; }

  bool is_zero() const;

  // Semicolon-joined coordinates, e.g. "1;3".
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.coords_ <=> b.coords_;
  }

private:
  friend class GroupSpec;
  GroupElement(std::vector<std::int64_t> coords, std::size_t rank)
      : coords_(std::move(coords)), rank_(rank) {}

  std::vector<std::int64_t> coords_;
  std::size_t rank_ = 0;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

// Finitely generated discrete abelian group Z^rank x prod Z_{m_i}.
class GroupSpec {
public:
  GroupSpec() = default;

  std::size_t rank() const { return rank_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t dimension() const { return rank_ + moduli_.size(); }
  bool is_finite() const { return rank_ == 0; }
  // Order of the torsion part.
  std::int64_t torsion_order() const;

  // Builds a canonical element; torsion entries may be any integers and are
  // reduced. Throws ShapeMismatch on wrong lengths.
  GroupElement element(std::span<const std::int64_t> free,
                       std::span<const std::int64_t> torsion) const;
  // Convenience form taking the concatenated coordinates.
  GroupElement element(std::initializer_list<std::int64_t> coords) const;
  GroupElement element_from_coords(std::span<const std::int64_t> coords) const;

  GroupElement identity() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
  }

  bool conforms(const GroupElement& x) const;
  void require_conforming(const GroupElement& x) const;

  // "Z^2 x Z_4" style description.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
  friend GroupSpec make_group(long rank, std::vector<std::int64_t> moduli);
  GroupSpec(std::size_t rank, std::vector<std::int64_t> moduli)
      : rank_(rank), moduli_(std::move(moduli)) {}

  std::size_t rank_ = 0;
  std::vector<std::int64_t> moduli_;
};

// Throws ModulusOutOfRange if rank < 0 or any modulus < 2.
GroupSpec make_group(long rank, std::vector<std::int64_t> moduli = {});

GroupElement elem_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);

// A validated symmetric generating set not containing the identity; the
// vertex set of the unit sphere of Cay(G, S).
class GeneratorSet {
public:
  const GroupSpec& group() const { return group_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t degree() const { return elements_.size(); }

private:
  friend GeneratorSet validate_generators(const GroupSpec&, std::vector<GroupElement>);
  GeneratorSet(GroupSpec g, std::vector<GroupElement> s)
      : group_(std::move(g)), elements_(std::move(s)) {}

  GroupSpec group_;
  std::vector<GroupElement> elements_;
};

// Checks, in order: non-empty and conforming (ShapeMismatch), pairwise
// distinct (DuplicateGenerator), identity excluded (ContainsIdentity),
// S = -S (NotSymmetric), and <S> = G via the Smith form of the generator rows
// stacked on the torsion relations (DoesNotGenerate).
GeneratorSet validate_generators(const GroupSpec& g, std::vector<GroupElement> s);

// True iff the rows generate all of G; no other checks.
bool generates(const GroupSpec& g, std::span<const GroupElement> s);

// Projection G -> G/H for a finite subgroup H. The target is presented in
// invariant-factor form; for trivial H the target is G itself and the
// projection is the identity.
class Quotient {
public:
  const GroupSpec& source() const { return source_; }
  const GroupSpec& target() const { return target_; }

  GroupElement project(const GroupElement& x) const;
  // Canonical preimage of a quotient element.
  GroupElement representative(const GroupElement& q) const;
  // All |H| preimages of q, sorted.
  std::vector<GroupElement> fiber(const GroupElement& q) const;

  // Elements of H inside the source group, sorted; the identity comes first.
  const std::vector<GroupElement>& subgroup() const { return subgroup_; }
  std::size_t subgroup_order() const { return subgroup_.size(); }

private:
  friend Quotient quotient(const GroupSpec&, std::span<const GroupElement>);
  Quotient() = default;

  GroupSpec source_;
  GroupSpec target_;
  bool trivial_ = true;
  // Torsion coordinate change V (columns reduced mod the invariant factor
  // they feed) and V^{-1} (columns reduced mod the source moduli). Only the
  // columns with invariant factor > 1 survive into the target.
  std::vector<std::vector<std::int64_t>> transform_;
  std::vector<std::vector<std::int64_t>> inverse_;
  std::vector<std::int64_t> factors_;     // all invariant factors
  std::vector<std::size_t> kept_;         // indices with factor > 1
  std::vector<GroupElement> subgroup_;
};

// Throws InfiniteSubgroup if a generator has a nonzero free part.
Quotient quotient(const GroupSpec& g, std::span<const GroupElement> h_gens);

// Word-metric distances from the identity in Cay(G, S) for every element of
// the ball of the given radius (breadth-first search).
std::unordered_map<GroupElement, int, GroupElementHash>
word_distances(const GeneratorSet& s, int radius);

} // namespace lattice_waves
