#include "lattice_waves/oracle.hpp"

#include "lattice_waves/cayley.hpp"
#include "lattice_waves/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <unordered_set>

namespace lattice_waves::oracle {

namespace {

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;
using VertexSet = std::unordered_set<TreeVertex, TreeVertexHash>;

void require_group(const SupportedFunction& u, const GroupSpec& g) {
  if (!(u.group() == g))
    throw Error(ErrorCode::GroupMismatch, "function and generators live on different groups");
}

// Every x whose update can read a nonzero value of u: supp(u) and supp(u) - S.
void add_candidates(const SupportedFunction& u, const GeneratorSet& s, ElementSet& out) {
  const GroupSpec& g = s.group();
  for (const auto& [y, v] : u.entries()) {
    out.insert(y);
    for (const auto& gen : s.elements()) out.insert(g.sub(y, gen));
  }
}

Rational neighbour_sum(const SupportedFunction& u, const GeneratorSet& s, const GroupElement& x) {
  Rational sum = 0;
  for (const auto& gen : s.elements()) sum += u(s.group().add(x, gen));
  return sum;
}

// Distinct coset representatives s_i in S, in order of appearance.
std::vector<GroupElement> coset_representatives(const CosetProblem& p) {
  std::vector<GroupElement> reps;
  std::set<GroupElement> seen;
  for (const auto& x : p.generators)
    if (seen.insert(p.quotient.project(x)).second) reps.push_back(x);
  return reps;
}

// (1/|H|) sum_{h} sum_{i} u(x + h + s_i)
Rational lifted_neighbour_mean(const SupportedFunction& u, const CosetProblem& p,
                               const std::vector<GroupElement>& reps, const GroupElement& x) {
  const GroupSpec& g = p.base_group;
  Rational sum = 0;
  for (const auto& h : p.quotient.subgroup())
    for (const auto& s : reps) sum += u(g.add(g.add(x, h), s));
  return sum / static_cast<long>(p.h_order());
}

void add_lifted_candidates(const SupportedFunction& u, const CosetProblem& p,
                           const std::vector<GroupElement>& reps, ElementSet& out) {
  const GroupSpec& g = p.base_group;
  for (const auto& [y, v] : u.entries()) {
    out.insert(y);
    for (const auto& h : p.quotient.subgroup())
      for (const auto& s : reps) out.insert(g.sub(g.sub(y, h), s));
  }
}

void require_coset_constant(const SupportedFunction& u, const CosetProblem& p, const char* what) {
  if (!is_coset_constant(u, p))
    throw Error(ErrorCode::CosetInconstant, std::string(what) + " is not constant on cosets of H");
}

Rational tree_neighbour_sum(const TreeFunction& u, const TreeVertex& x) {
  Rational sum = 0;
  for (const auto& y : tree_neighbors(x, u.k())) sum += u(y);
  return sum;
}

void add_tree_candidates(const TreeFunction& u, VertexSet& out) {
  for (const auto& [y, v] : u.entries()) {
    out.insert(y);
    for (const auto& z : tree_neighbors(y, u.k())) out.insert(z);
  }
}

std::size_t distance_to_set(const TreeVertex& x, std::span<const TreeVertex> targets) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& t : targets) best = std::min(best, tree_distance(x, t));
  return best;
}

TreeFunction restrict_to_cone(const TreeFunction& u, std::span<const TreeVertex> eval_at,
                              std::size_t radius) {
  TreeFunction out(u.k());
  for (const auto& [x, v] : u.entries())
    if (distance_to_set(x, eval_at) <= radius) out.set(x, v);
  return out;
}

TreeFunction sample(const TreeFunction& u, std::span<const TreeVertex> eval_at) {
  TreeFunction out(u.k());
  for (const auto& x : eval_at) out.set(x, u(x));
  return out;
}

Rational path_value(const PathProfile& u, long r) {
  auto it = u.find(r);
  return it == u.end() ? Rational(0) : it->second;
}

void put(PathProfile& u, long r, const Rational& v) {
  if (v != 0) u[r] = v;
}

} // namespace

SupportedFunction laplacian(const SupportedFunction& u, const GeneratorSet& s) {
  require_group(u, s.group());
  ElementSet candidates;
  add_candidates(u, s, candidates);
  const long k = static_cast<long>(s.degree());
  SupportedFunction out(s.group());
  for (const auto& x : candidates) out.set(x, k * u(x) - neighbour_sum(u, s, x));
  return out;
}

SupportedFunction cayley_heat_step(const SupportedFunction& u, const GeneratorSet& s) {
  require_group(u, s.group());
  ElementSet candidates;
  add_candidates(u, s, candidates);
  const long k = static_cast<long>(s.degree());
  SupportedFunction out(s.group());
  for (const auto& x : candidates) out.set(x, neighbour_sum(u, s, x) - (k - 1) * u(x));
  return out;
}

SupportedFunction cayley_wave_step(const SupportedFunction& prev, const SupportedFunction& curr,
                                   const GeneratorSet& s) {
  require_group(prev, s.group());
  require_group(curr, s.group());
  ElementSet candidates;
  add_candidates(prev, s, candidates);
  for (const auto& [x, v] : curr.entries()) candidates.insert(x);
  const long k = static_cast<long>(s.degree());
  SupportedFunction out(s.group());
  for (const auto& x : candidates)
    out.set(x, 2 * curr(x) + neighbour_sum(prev, s, x) - (k + 1) * prev(x));
  return out;
}

std::vector<SupportedFunction> cayley_heat_trajectory(const SupportedFunction& f,
                                                      const GeneratorSet& s, int n) {
  std::vector<SupportedFunction> traj{f};
  for (int m = 0; m < n; ++m) traj.push_back(cayley_heat_step(traj.back(), s));
  return traj;
}

std::vector<SupportedFunction> cayley_wave_trajectory(const SupportedFunction& f,
                                                      const SupportedFunction& g,
                                                      const GeneratorSet& s, int n) {
  std::vector<SupportedFunction> traj{f};
  if (n >= 1) traj.push_back(f + g);
  for (int m = 2; m <= n; ++m)
    traj.push_back(cayley_wave_step(traj[traj.size() - 2], traj.back(), s));
  return traj;
}

bool is_coset_constant(const SupportedFunction& u, const CosetProblem& p) {
  for (const auto& [x, v] : u.entries())
    for (const auto& h : p.quotient.subgroup())
      if (u(p.base_group.add(x, h)) != v) return false;
  return true;
}

SupportedFunction lifted_coset_heat_step(const SupportedFunction& u, const CosetProblem& p) {
  require_group(u, p.base_group);
  require_coset_constant(u, p, "lifted iterate");
  const auto reps = coset_representatives(p);
  const long k = static_cast<long>(reps.size());
  ElementSet candidates;
  add_lifted_candidates(u, p, reps, candidates);
  SupportedFunction out(p.base_group);
  for (const auto& x : candidates)
    out.set(x, u(x) - k * u(x) + lifted_neighbour_mean(u, p, reps, x));
  require_coset_constant(out, p, "lifted heat step output");
  return out;
}

SupportedFunction lifted_coset_wave_step(const SupportedFunction& prev,
                                         const SupportedFunction& curr, const CosetProblem& p) {
  require_group(prev, p.base_group);
  require_group(curr, p.base_group);
  require_coset_constant(prev, p, "lifted iterate");
  require_coset_constant(curr, p, "lifted iterate");
  const auto reps = coset_representatives(p);
  const long k = static_cast<long>(reps.size());
  ElementSet candidates;
  add_lifted_candidates(prev, p, reps, candidates);
  for (const auto& [x, v] : curr.entries()) candidates.insert(x);
  SupportedFunction out(p.base_group);
  for (const auto& x : candidates) {
    const Rational scaled_laplacian = k * prev(x) - lifted_neighbour_mean(prev, p, reps, x);
    out.set(x, 2 * curr(x) - prev(x) - scaled_laplacian);
  }
  require_coset_constant(out, p, "lifted wave step output");
  return out;
}

TreeFunction tree_laplacian(const TreeFunction& u) {
  VertexSet candidates;
  add_tree_candidates(u, candidates);
  TreeFunction out(u.k());
  for (const auto& x : candidates) out.set(x, u.k() * u(x) - tree_neighbour_sum(u, x));
  return out;
}

TreeFunction tree_heat_step(const TreeFunction& u) {
  VertexSet candidates;
  add_tree_candidates(u, candidates);
  TreeFunction out(u.k());
  for (const auto& x : candidates) out.set(x, tree_neighbour_sum(u, x) - (u.k() - 1) * u(x));
  return out;
}

TreeFunction tree_wave_step(const TreeFunction& prev, const TreeFunction& curr) {
  if (prev.k() != curr.k()) throw Error(ErrorCode::GroupMismatch, "tree functions of different degree");
  VertexSet candidates;
  add_tree_candidates(prev, candidates);
  for (const auto& [x, v] : curr.entries()) candidates.insert(x);
  TreeFunction out(prev.k());
  for (const auto& x : candidates)
    out.set(x, 2 * curr(x) + tree_neighbour_sum(prev, x) - (prev.k() + 1) * prev(x));
  return out;
}

std::vector<TreeFunction> tree_heat_trajectory(const TreeFunction& f, int n,
                                               std::span<const TreeVertex> eval_at) {
  std::vector<TreeFunction> out;
  TreeFunction u = restrict_to_cone(f, eval_at, static_cast<std::size_t>(n));
  out.push_back(sample(u, eval_at));
  for (int m = 1; m <= n; ++m) {
    u = restrict_to_cone(tree_heat_step(u), eval_at, static_cast<std::size_t>(n - m));
    out.push_back(sample(u, eval_at));
  }
  return out;
}

std::vector<TreeFunction> tree_wave_trajectory(const TreeFunction& f, const TreeFunction& g,
                                               int n, std::span<const TreeVertex> eval_at) {
  std::vector<TreeFunction> out;
  const auto cone = [&](const TreeFunction& u, int m) {
    return restrict_to_cone(u, eval_at, static_cast<std::size_t>(std::max(n - m, 0)));
  };
  TreeFunction prev = cone(f, 0);
  out.push_back(sample(prev, eval_at));
  if (n == 0) return out;
  TreeFunction first = f;
  first += g;
  TreeFunction curr = cone(first, 1);
  out.push_back(sample(curr, eval_at));
  for (int m = 2; m <= n; ++m) {
    // u(., m) reads u(., m-2) one step out, so prev keeps radius n - m + 2.
    TreeFunction next = cone(tree_wave_step(prev, curr), m);
    prev = std::move(curr);
    curr = std::move(next);
    out.push_back(sample(curr, eval_at));
  }
  return out;
}

PathProfile even_profile(std::span<const Rational> radial) {
  PathProfile u;
  for (std::size_t r = 0; r < radial.size(); ++r) {
    put(u, static_cast<long>(r), radial[r]);
    if (r > 0) put(u, -static_cast<long>(r), radial[r]);
  }
  return u;
}

namespace {

Rational radial_value(const RadialProfile& u, long r) {
  if (r < 0) r = -r;
  return r < static_cast<long>(u.size()) ? u[static_cast<std::size_t>(r)] : Rational(0);
}

} // namespace

RadialProfile radial_heat_step(const RadialProfile& u, int k) {
  RadialProfile out(u.size() + 1);
  for (long r = 0; r < static_cast<long>(out.size()); ++r)
    out[static_cast<std::size_t>(r)] = (k - 1) * radial_value(u, r + 1) + radial_value(u, r - 1) -
                                       (k - 1) * radial_value(u, r);
  return out;
}

RadialProfile radial_wave_step(const RadialProfile& prev, const RadialProfile& curr, int k) {
  RadialProfile out(std::max(prev.size() + 1, curr.size()));
  for (long r = 0; r < static_cast<long>(out.size()); ++r)
    out[static_cast<std::size_t>(r)] = 2 * radial_value(curr, r) - (k + 1) * radial_value(prev, r) +
                                       (k - 1) * radial_value(prev, r + 1) + radial_value(prev, r - 1);
  return out;
}

PathProfile path_heat_step(const PathProfile& u, int k) {
  if (u.empty()) return {};
  PathProfile out;
  const long lo = u.begin()->first - 1, hi = u.rbegin()->first + 1;
  for (long r = lo; r <= hi; ++r)
    put(out, r,
        (k - 1) * path_value(u, r + 1) + path_value(u, r - 1) - (k - 1) * path_value(u, r));
  return out;
}

PathProfile path_wave_step(const PathProfile& prev, const PathProfile& curr, int k) {
  PathProfile out;
  long lo = 0, hi = -1;
  auto widen = [&](const PathProfile& u, long pad) {
    if (u.empty()) return;
    if (hi < lo) {
      lo = u.begin()->first - pad;
      hi = u.rbegin()->first + pad;
    } else {
      lo = std::min(lo, u.begin()->first - pad);
      hi = std::max(hi, u.rbegin()->first + pad);
    }
  };
  widen(prev, 1);
  widen(curr, 0);
  for (long r = lo; r <= hi; ++r)
    put(out, r,
        2 * path_value(curr, r) - (k + 1) * path_value(prev, r) + (k - 1) * path_value(prev, r + 1) +
            path_value(prev, r - 1));
  return out;
}

double quadrature_kernel(const GeneratorSet& s, int n, long r) {
  const GroupSpec& g = s.group();
  if (!g.moduli().empty())
    throw Error(ErrorCode::TorsionUnsupported, "quadrature needs the group Z");
  if (g.rank() != 1) throw Error(ErrorCode::ShapeMismatch, "quadrature needs the group Z");
  if (n < 0) throw Error(ErrorCode::InvalidInput, "time index must be non-negative");
  std::int64_t reach = 0;
  for (const auto& x : s.elements()) reach = std::max(reach, std::abs(x.free()[0]));
  const long nodes = 2 * n * reach + 2;
  std::complex<double> acc = 0;
  for (long i = 0; i < nodes; ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(nodes);
    const std::complex<double> a = symbol_eval(s, std::span<const double>(&t, 1));
    acc += std::pow(1.0 - a, n) * std::polar(1.0, static_cast<double>(r) * t);
  }
  return acc.real() / static_cast<double>(nodes);
}

std::map<int, Integer> symbol_power(int k, int j) {
  const std::map<int, Integer> a{{-1, Integer(-(k - 1))}, {0, Integer(k)}, {1, Integer(-1)}};
  std::map<int, Integer> p{{0, Integer(1)}};
  for (int step = 0; step < j; ++step) {
    std::map<int, Integer> next;
    for (const auto& [e1, c1] : p)
      for (const auto& [e2, c2] : a) next[e1 + e2] += c1 * c2;
    p = std::move(next);
  }
  return p;
}

} // namespace lattice_waves::oracle
