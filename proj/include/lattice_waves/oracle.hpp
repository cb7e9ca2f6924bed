#pragma once

// Brute-force reference solvers. Every routine here steps a recurrence
// directly, vertex by vertex, and shares nothing with the closed-form engine
// beyond the group and scalar types.

#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/coset.hpp"
#include "lattice_waves/supported_function.hpp"
#include "lattice_waves/tree.hpp"

#include <map>
#include <span>
#include <vector>

namespace lattice_waves::oracle {

// (Delta u)(x) = k u(x) - sum_i u(x + s_i).
SupportedFunction laplacian(const SupportedFunction& u, const GeneratorSet& s);

// u(x, n+1) = sum_i u(x + s_i, n) - (k-1) u(x, n).
SupportedFunction cayley_heat_step(const SupportedFunction& u, const GeneratorSet& s);

// u(x, n+2) = 2 u(x, n+1) + sum_i u(x + s_i, n) - (k+1) u(x, n).
SupportedFunction cayley_wave_step(const SupportedFunction& prev, const SupportedFunction& curr,
                                   const GeneratorSet& s);

// u(., 0..n) by repeated stepping; the wave run is seeded with u0 = f, u1 = f + g.
std::vector<SupportedFunction> cayley_heat_trajectory(const SupportedFunction& f,
                                                      const GeneratorSet& s, int n);
std::vector<SupportedFunction> cayley_wave_trajectory(const SupportedFunction& f,
                                                      const SupportedFunction& g,
                                                      const GeneratorSet& s, int n);

// One step of the lifted coset recurrence on G,
//   u(x, n+1) = u(x, n) - k u(x, n) + (1/|H|) sum_{h in H} sum_{i=1}^k u(x + h + s_i, n),
// where s_1..s_k are representatives in S of the k distinct cosets s + H.
// Input and output must be constant on cosets (CosetInconstant otherwise).
SupportedFunction lifted_coset_heat_step(const SupportedFunction& u, const CosetProblem& p);

// u(x, n+2) = 2 u(x, n+1) - u(x, n) - (1/|H|) (Delta_lifted u)(x, n).
SupportedFunction lifted_coset_wave_step(const SupportedFunction& prev,
                                         const SupportedFunction& curr, const CosetProblem& p);

// True iff u takes one value on every coset it touches.
bool is_coset_constant(const SupportedFunction& u, const CosetProblem& p);

// (Delta_T u)(x) = k u(x) - sum_{y ~ x} u(y).
TreeFunction tree_laplacian(const TreeFunction& u);

TreeFunction tree_heat_step(const TreeFunction& u);
TreeFunction tree_wave_step(const TreeFunction& prev, const TreeFunction& curr);

// Direct stepping on the tree, keeping at step m only the vertices within
// distance n - m of eval_at (the values there cannot be influenced by
// anything outside). Returns u(., m) restricted to eval_at for m = 0..n.
std::vector<TreeFunction> tree_heat_trajectory(const TreeFunction& f, int n,
                                               std::span<const TreeVertex> eval_at);
std::vector<TreeFunction> tree_wave_trajectory(const TreeFunction& f, const TreeFunction& g,
                                               int n, std::span<const TreeVertex> eval_at);

// Profile on the path Z = V(P).
using PathProfile = std::map<long, Rational>;

// Even extension of a radial profile (values at r = 0, 1, 2, ...).
PathProfile even_profile(std::span<const Rational> radial);

// u(r, n+1) = (k-1) u(r+1, n) + u(r-1, n) - (k-1) u(r, n).
PathProfile path_heat_step(const PathProfile& u, int k);

// u(r, n+2) = 2 u(r, n+1) - (k+1) u(r, n) + (k-1) u(r+1, n) + u(r-1, n).
PathProfile path_wave_step(const PathProfile& prev, const PathProfile& curr, int k);

// Radial profile (r = 0, 1, 2, ...) of spherical means. One step of the same
// recurrences restricted to r >= 0, reading the value at r = -1 from r = 1
// because spherical means are even at every time.
using RadialProfile = std::vector<Rational>;
RadialProfile radial_heat_step(const RadialProfile& u, int k);
RadialProfile radial_wave_step(const RadialProfile& prev, const RadialProfile& curr, int k);

// Trapezoid rule for (1/2pi) int_0^{2pi} (1 - a(t))^n e^{irt} dt with
// N = 2 n max|s| + 2 nodes (2n + 2 for S = {+1, -1}), exact up to rounding for
// these trigonometric polynomials. Group must be Z (TorsionUnsupported /
// ShapeMismatch otherwise).
double quadrature_kernel(const GeneratorSet& s, int n, long r);

// Coefficients of a(t)^j, a(t) = -(k-1) e^{-it} + k - e^{it}, by repeated
// Laurent-polynomial multiplication; key = exponent of e^{it}.
std::map<int, Integer> symbol_power(int k, int j);

} // namespace lattice_waves::oracle
