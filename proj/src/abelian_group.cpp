#include "lattice_waves/abelian_group.hpp"

#include "lattice_waves/error.hpp"
#include "lattice_waves/smith_normal_form.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace lattice_waves {

namespace {

__extension__ typedef __int128 wide_int;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t reduce_integer(const Integer& a, std::int64_t m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r.get_si();
}

} // namespace

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(coords_[i]);
  }
  return out;
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t c : x.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

GroupSpec make_group(long rank, std::vector<std::int64_t> moduli) {
  if (rank < 0)
    throw Error(ErrorCode::ModulusOutOfRange, "rank must be non-negative");
  for (std::int64_t m : moduli)
    if (m < 2)
      throw Error(ErrorCode::ModulusOutOfRange,
                  "torsion modulus " + std::to_string(m) + " is below 2");
  return GroupSpec(static_cast<std::size_t>(rank), std::move(moduli));
}

std::int64_t GroupSpec::torsion_order() const {
  std::int64_t order = 1;
  for (std::int64_t m : moduli_) order *= m;
  return order;
}

GroupElement GroupSpec::element(std::span<const std::int64_t> free,
                                std::span<const std::int64_t> torsion) const {
  if (free.size() != rank_ || torsion.size() != moduli_.size())
    throw Error(ErrorCode::ShapeMismatch,
                "element shape (" + std::to_string(free.size()) + "," +
                    std::to_string(torsion.size()) + ") does not match group " + to_string());
  std::vector<std::int64_t> coords(free.begin(), free.end());
  coords.reserve(dimension());
  for (std::size_t i = 0; i < torsion.size(); ++i) coords.push_back(mod(torsion[i], moduli_[i]));
  return GroupElement(std::move(coords), rank_);
}

GroupElement GroupSpec::element(std::initializer_list<std::int64_t> coords) const {
  return element_from_coords(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

GroupElement GroupSpec::element_from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() != dimension())
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(coords.size()) + " coordinates given for group " + to_string());
  return element(coords.first(rank_), coords.subspan(rank_));
}

GroupElement GroupSpec::identity() const {
  return GroupElement(std::vector<std::int64_t>(dimension(), 0), rank_);
}

bool GroupSpec::conforms(const GroupElement& x) const {
  if (x.rank() != rank_ || x.coords().size() != dimension()) return false;
  auto t = x.torsion();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= moduli_[i]) return false;
  return true;
}

void GroupSpec::require_conforming(const GroupElement& x) const {
  if (!conforms(x))
    throw Error(ErrorCode::ShapeMismatch,
                "element (" + x.to_string() + ") does not belong to " + to_string());
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<std::int64_t> c(a.coords_);
  for (std::size_t i = 0; i < rank_; ++i) c[i] += b.coords_[i];
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t& v = c[rank_ + i];
    v += b.coords_[rank_ + i];
    if (v >= moduli_[i]) v -= moduli_[i];
  }
  return GroupElement(std::move(c), rank_);
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  std::vector<std::int64_t> c(a.coords_);
  for (std::size_t i = 0; i < rank_; ++i) c[i] = -c[i];
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t& v = c[rank_ + i];
    if (v != 0) v = moduli_[i] - v;
  }
  return GroupElement(std::move(c), rank_);
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << 'Z';
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (std::int64_t m : moduli_) {
    if (!first) os << " x ";
    os << "Z_" << m;
    first = false;
  }
  if (first) os << "{0}";
  return os.str();
}

GroupElement elem_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  g.require_conforming(a);
  g.require_conforming(b);
  return g.add(a, b);
}

bool generates(const GroupSpec& g, std::span<const GroupElement> s) {
  const std::size_t dim = g.dimension();
  if (dim == 0) return true;
  IntMatrix rows;
  for (const auto& x : s) {
    std::vector<Integer> row;
    for (std::int64_t c : x.coords()) row.emplace_back(static_cast<long>(c));
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < g.moduli().size(); ++i) {
    std::vector<Integer> row(dim, 0);
    row[g.rank() + i] = static_cast<long>(g.moduli()[i]);
    rows.push_back(std::move(row));
  }
  if (rows.size() < dim) return false;
  SmithForm snf = smith_normal_form(std::move(rows), dim);
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(),
                     [](const Integer& d) { return d == 1; });
}

GeneratorSet validate_generators(const GroupSpec& g, std::vector<GroupElement> s) {
  if (s.empty()) throw Error(ErrorCode::ShapeMismatch, "generating set is empty");
  for (const auto& x : s) g.require_conforming(x);

  std::set<GroupElement> seen;
  for (const auto& x : s)
    if (!seen.insert(x).second)
      throw Error(ErrorCode::DuplicateGenerator, "generator (" + x.to_string() + ") repeated");
  for (const auto& x : s)
    if (x.is_zero()) throw Error(ErrorCode::ContainsIdentity, "identity is in the generating set");
  for (const auto& x : s)
    if (!seen.contains(g.neg(x)))
      throw Error(ErrorCode::NotSymmetric,
                  "inverse of (" + x.to_string() + ") missing from the generating set");
  if (!generates(g, s))
    throw Error(ErrorCode::DoesNotGenerate, "set does not generate " + g.to_string());
  return GeneratorSet(g, std::move(s));
}

Quotient quotient(const GroupSpec& g, std::span<const GroupElement> h_gens) {
  for (const auto& h : h_gens) {
    g.require_conforming(h);
    for (std::int64_t c : h.free())
      if (c != 0)
        throw Error(ErrorCode::InfiniteSubgroup,
                    "subgroup generator (" + h.to_string() + ") has infinite order");
  }

  Quotient q;
  q.source_ = g;

  // H by closure under the generators; finite since it sits in the torsion part.
  std::set<GroupElement> h_elems{g.identity()};
  std::deque<GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& gen : h_gens) {
      GroupElement y = g.add(x, gen);
      if (h_elems.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  q.subgroup_.assign(h_elems.begin(), h_elems.end());

  if (q.subgroup_.size() == 1) {
    q.target_ = g;
    q.trivial_ = true;
    return q;
  }
  q.trivial_ = false;

  const std::size_t t = g.moduli().size();
  IntMatrix relations;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<Integer> row(t, 0);
    row[i] = static_cast<long>(g.moduli()[i]);
    relations.push_back(std::move(row));
  }
  for (const auto& h : h_gens) {
    std::vector<Integer> row;
    for (std::int64_t c : h.torsion()) row.emplace_back(static_cast<long>(c));
    relations.push_back(std::move(row));
  }
  SmithForm snf = smith_normal_form(std::move(relations), t);

  std::vector<std::int64_t> target_moduli;
  q.factors_.resize(t);
  for (std::size_t i = 0; i < t; ++i) {
    q.factors_[i] = snf.diagonal[i].get_si();
    if (q.factors_[i] > 1) {
      q.kept_.push_back(i);
      target_moduli.push_back(q.factors_[i]);
    }
  }
  q.transform_.assign(t, std::vector<std::int64_t>(t, 0));
  q.inverse_.assign(t, std::vector<std::int64_t>(t, 0));
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < t; ++c) {
      q.transform_[r][c] = reduce_integer(snf.column_transform[r][c], q.factors_[c]);
      q.inverse_[r][c] = reduce_integer(snf.column_inverse[r][c], g.moduli()[c]);
    }
  q.target_ = make_group(static_cast<long>(g.rank()), std::move(target_moduli));
  return q;
}

GroupElement Quotient::project(const GroupElement& x) const {
  source_.require_conforming(x);
  if (trivial_) return x;
  auto tors = x.torsion();
  std::vector<std::int64_t> out_tors;
  out_tors.reserve(kept_.size());
  for (std::size_t c : kept_) {
    wide_int acc = 0;
    for (std::size_t r = 0; r < tors.size(); ++r)
      acc += static_cast<wide_int>(tors[r]) * transform_[r][c];
    out_tors.push_back(static_cast<std::int64_t>(acc % factors_[c]));
  }
  return target_.element(x.free(), out_tors);
}

GroupElement Quotient::representative(const GroupElement& q) const {
  target_.require_conforming(q);
  if (trivial_) return q;
  auto tors = q.torsion();
  const std::size_t t = source_.moduli().size();
  std::vector<std::int64_t> out(t, 0);
  for (std::size_t c = 0; c < t; ++c) {
    wide_int acc = 0;
    for (std::size_t i = 0; i < kept_.size(); ++i)
      acc += static_cast<wide_int>(tors[i]) * inverse_[kept_[i]][c];
    out[c] = static_cast<std::int64_t>(acc % source_.moduli()[c]);
  }
  return source_.element(q.free(), out);
}

std::vector<GroupElement> Quotient::fiber(const GroupElement& q) const {
  GroupElement base = representative(q);
  std::vector<GroupElement> out;
  out.reserve(subgroup_.size());
  for (const auto& h : subgroup_) out.push_back(source_.add(base, h));
  std::sort(out.begin(), out.end());
  return out;
}

std::unordered_map<GroupElement, int, GroupElementHash>
word_distances(const GeneratorSet& s, int radius) {
  const GroupSpec& g = s.group();
  std::unordered_map<GroupElement, int, GroupElementHash> dist{{g.identity(), 0}};
  std::vector<GroupElement> layer{g.identity()};
  for (int r = 1; r <= radius && !layer.empty(); ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : layer)
      for (const auto& gen : s.elements()) {
        GroupElement y = g.add(x, gen);
        if (dist.emplace(y, r).second) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  return dist;
}

} // namespace lattice_waves
