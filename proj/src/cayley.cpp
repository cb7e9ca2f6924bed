#include "lattice_waves/cayley.hpp"

#include "lattice_waves/error.hpp"
#include "lattice_waves/parallel.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace lattice_waves {

namespace {

using Map = SupportedFunction::Map;
using Entry = std::pair<const GroupElement*, const Rational*>;

// Below this many term products a convolution runs on the calling thread.
constexpr std::size_t kParallelWork = 1u << 16;

void accumulate(const GroupSpec& group, std::span<const Entry> lhs,
                const std::vector<Entry>& rhs, Map& out) {
  Rational term;
  for (const auto& [x, v] : lhs)
    for (const auto& [y, w] : rhs) {
      mpq_mul(term.get_mpq_t(), v->get_mpq_t(), w->get_mpq_t());
      auto [it, inserted] = out.try_emplace(group.add(*x, *y), term);
      if (!inserted) it->second += term;
    }
}

void require_time(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "time index must be non-negative");
}

SupportedFunction from_map(const GroupSpec& g, Map&& m) {
  SupportedFunction out(g);
  for (auto& [x, v] : m)
    if (v != 0) out.set(x, v);
  return out;
}

} // namespace

std::string_view kernel_role_name(KernelRole role) {
  switch (role) {
  case KernelRole::Heat: return "heat";
  case KernelRole::WaveF: return "wave-f";
  case KernelRole::WaveG: return "wave-g";
  }
  return "heat";
}

SupportedFunction convolve(const SupportedFunction& f, const SupportedFunction& g) {
  require_same_group(f, g);
  const GroupSpec& group = f.group();

  std::vector<Entry> lhs, rhs;
  lhs.reserve(f.support_size());
  rhs.reserve(g.support_size());
  for (const auto& [x, v] : f.entries()) lhs.emplace_back(&x, &v);
  for (const auto& [x, v] : g.entries()) rhs.emplace_back(&x, &v);

  const std::size_t work = lhs.size() * rhs.size();
  std::size_t threads = std::min(max_threads(), lhs.size());
  if (work < kParallelWork || threads <= 1) {
    Map out;
    accumulate(group, lhs, rhs, out);
    return from_map(group, std::move(out));
  }

  // Exact rational sums do not depend on accumulation order, so partial maps
  // merged in any order give the sequential result bit for bit.
  std::vector<Map> partial(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (lhs.size() + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(lhs.size(), begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, t, begin, end] {
      accumulate(group, std::span<const Entry>(lhs).subspan(begin, end - begin), rhs, partial[t]);
    });
  }
  for (auto& w : workers) w.join();

  Map out = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t)
    for (auto& [x, v] : partial[t]) {
      auto [it, inserted] = out.try_emplace(x, v);
      if (!inserted) it->second += v;
    }
  return from_map(group, std::move(out));
}

SupportedFunction inverse_symbol_a(const GeneratorSet& s) {
  const GroupSpec& g = s.group();
  SupportedFunction a(g);
  a.set(g.identity(), static_cast<long>(s.degree()));
  for (const auto& x : s.elements()) a.add(x, -1);
  return a;
}

SupportedFunction heat_step_kernel(const GeneratorSet& s) {
  const GroupSpec& g = s.group();
  return SupportedFunction::delta(g, g.identity()) - inverse_symbol_a(s);
}

Kernel heat_kernel(const GeneratorSet& s, int n) {
  require_time(n);
  const GroupSpec& g = s.group();
  // Multiplying by the (k+1)-point propagator costs |K_m| (k+1) per step,
  // which beats squaring (|K_{n/2}|^2) for every n.
  SupportedFunction step = heat_step_kernel(s);
  SupportedFunction k = SupportedFunction::delta(g, g.identity());
  for (int m = 0; m < n; ++m) k = convolve(k, step);
  return {std::move(k), KernelRole::Heat, n};
}

Kernel heat_kernel_binomial(const GeneratorSet& s, int n) {
  require_time(n);
  const GroupSpec& g = s.group();
  const SupportedFunction a = inverse_symbol_a(s);
  SupportedFunction power = SupportedFunction::delta(g, g.identity());
  SupportedFunction k = power;  // j = 0 term
  for (int j = 1; j <= n; ++j) {
    power = convolve(power, a);
    Rational c(binomial(n, j));
    if (j % 2) c = -c;
    k += c * power;
  }
  return {std::move(k), KernelRole::Heat, n};
}

std::pair<Kernel, Kernel> wave_kernels(const GeneratorSet& s, int n) {
  require_time(n);
  const GroupSpec& g = s.group();
  const SupportedFunction a = inverse_symbol_a(s);
  SupportedFunction power = SupportedFunction::delta(g, g.identity());
  SupportedFunction f_kernel(g), g_kernel(g);
  for (int i = 0; 2 * i <= n; ++i) {
    if (i > 0) power = convolve(power, a);
    const int sign = i % 2 ? -1 : 1;
    f_kernel += Rational(sign * binomial(n, 2 * i)) * power;
    if (2 * i + 1 <= n) g_kernel += Rational(sign * binomial(n, 2 * i + 1)) * power;
  }
  return {Kernel{std::move(f_kernel), KernelRole::WaveF, n},
          Kernel{std::move(g_kernel), KernelRole::WaveG, n}};
}

SupportedFunction heat_solve(const SupportedFunction& f, const GeneratorSet& s, int n) {
  if (!(f.group() == s.group()))
    throw Error(ErrorCode::GroupMismatch, "initial data and generators live on different groups");
  return convolve(heat_kernel(s, n).data, f);
}

SupportedFunction wave_solve(const SupportedFunction& f, const SupportedFunction& g,
                             const GeneratorSet& s, int n) {
  require_same_group(f, g);
  if (!(f.group() == s.group()))
    throw Error(ErrorCode::GroupMismatch, "initial data and generators live on different groups");
  const Rational mass = trivial_character_sum(g);
  if (mass != 0) throw NotSolvableError(mass.get_str());
  auto [fk, gk] = wave_kernels(s, n);
  return convolve(fk.data, f) + convolve(gk.data, g);
}

std::complex<double> symbol_eval(const GeneratorSet& s, std::span<const double> t) {
  const GroupSpec& g = s.group();
  if (!g.moduli().empty())
    throw Error(ErrorCode::TorsionUnsupported, "symbol evaluation needs a torsion-free group");
  if (t.size() != g.rank())
    throw Error(ErrorCode::ShapeMismatch, "angle vector length differs from the group rank");
  std::complex<double> a(static_cast<double>(s.degree()), 0.0);
  for (const auto& x : s.elements()) {
    double phase = 0;
    for (std::size_t i = 0; i < t.size(); ++i) phase += t[i] * static_cast<double>(x.free()[i]);
    a -= std::polar(1.0, -phase);
  }
  return a;
}

} // namespace lattice_waves
