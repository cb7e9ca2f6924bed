#pragma once

#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/supported_function.hpp"

#include <complex>
#include <span>
#include <string_view>
#include <utility>

namespace lattice_waves {

enum class KernelRole { Heat, WaveF, WaveG };

std::string_view kernel_role_name(KernelRole role);

// Convolution kernel for time index n. Supports: K_n in the ball of radius n,
// F_n in radius floor(n/2), G_n in radius floor((n-1)/2).
struct Kernel {
  SupportedFunction data;
  KernelRole role = KernelRole::Heat;
  int n = 0;
};

// (f * g)(x) = sum_y f(y) g(x - y). Exact; parallelised over supp(f) when the
// work is large enough, with a result independent of the thread count.
SupportedFunction convolve(const SupportedFunction& f, const SupportedFunction& g);

// Inverse transform of the Laplacian symbol: k delta_e - sum_{s in S} delta_s.
SupportedFunction inverse_symbol_a(const GeneratorSet& s);

// One-step heat propagator delta_e - inverse_symbol_a(S).
SupportedFunction heat_step_kernel(const GeneratorSet& s);

// K_n as the n-fold convolution power of the one-step propagator.
Kernel heat_kernel(const GeneratorSet& s, int n);

// K_n as the literal binomial sum  sum_j (-1)^j C(n,j) a^{*j}. Second route
// for the same kernel; slower.
Kernel heat_kernel_binomial(const GeneratorSet& s, int n);

// (F_n, G_n) from the even and odd binomial sums in powers of a.
std::pair<Kernel, Kernel> wave_kernels(const GeneratorSet& s, int n);

// u(., n) = K_n * f.
SupportedFunction heat_solve(const SupportedFunction& f, const GeneratorSet& s, int n);

// u(., n) = F_n * f + G_n * g. Throws NotSolvableError when sum(g) != 0.
SupportedFunction wave_solve(const SupportedFunction& f, const SupportedFunction& g,
                             const GeneratorSet& s, int n);

// a(t) = k - sum_j exp(-i t . s_j) for the character x -> exp(i t . x) of Z^d.
// Throws TorsionUnsupported on groups with torsion.
std::complex<double> symbol_eval(const GeneratorSet& s, std::span<const double> t);

} // namespace lattice_waves
