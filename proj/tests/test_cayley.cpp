#include "lattice_waves/cayley.hpp"
#include "lattice_waves/parallel.hpp"
#include "lattice_waves/verify.hpp"

#include "test_support.hpp"

#include <cmath>
#include <vector>

using namespace lattice_waves;
using lattice_waves::testing::code_of;
using lattice_waves::testing::q;

namespace {

const GroupSpec& z() {
  static const GroupSpec g = make_group(1);
  return g;
}

GeneratorSet unit_steps() { return validate_generators(z(), {z().element({1}), z().element({-1})}); }

SupportedFunction line(std::initializer_list<std::pair<long, Rational>> values) {
  SupportedFunction f(z());
  for (const auto& [x, v] : values) f.set(z().element({x}), v);
  return f;
}

} // namespace

TEST_SUITE("cayley") {
  TEST_CASE("heat kernels on Z") {
    const GeneratorSet s = unit_steps();
    CHECK(heat_kernel(s, 0).data == SupportedFunction::delta(z(), z().identity()));
    CHECK(heat_kernel(s, 1).data == line({{-1, 1}, {0, -1}, {1, 1}}));
    const Kernel k2 = heat_kernel(s, 2);
    CHECK(k2.data == line({{-2, 1}, {-1, -2}, {0, 3}, {1, -2}, {2, 1}}));
    CHECK(k2.role == KernelRole::Heat);
    CHECK(heat_kernel_binomial(s, 7).data == heat_kernel(s, 7).data);
    CHECK(code_of([&] { heat_kernel(s, -1); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("convolution") {
    const SupportedFunction a = line({{0, 1}, {1, -1}});
    const SupportedFunction b = line({{0, 1}, {-1, -1}});
    CHECK(convolve(a, b) == line({{-1, -1}, {0, 2}, {1, -1}}));
    CHECK(convolve(a, b) == convolve(b, a));
    const SupportedFunction other(make_group(2));
    CHECK(code_of([&] { convolve(a, other); }) == ErrorCode::GroupMismatch);
  }

  TEST_CASE("wave kernels") {
    const GeneratorSet s = unit_steps();
    const auto [f2, g2] = wave_kernels(s, 2);
    CHECK(f2.data == line({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(g2.data == line({{0, 2}}));
    const auto [f0, g0] = wave_kernels(s, 0);
    CHECK(f0.data == line({{0, 1}}));
    CHECK(g0.data.is_zero());
  }

  TEST_CASE("wave solutions") {
    const GeneratorSet s = unit_steps();
    const SupportedFunction zero(z());
    const SupportedFunction g = line({{1, 1}, {-1, -1}});
    CHECK(wave_solve(zero, g, s, 2) == line({{1, 2}, {-1, -2}}));
    CHECK(wave_solve(line({{0, 1}}), zero, s, 2) == line({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(wave_solve(line({{0, 1}}), g, s, 1) == line({{0, 1}, {1, 1}, {-1, -1}}));
  }

  TEST_CASE("nonzero-mean velocity is rejected") {
    const GeneratorSet s = unit_steps();
    try {
      wave_solve(SupportedFunction(z()), line({{3, q(1, 2)}}), s, 4);
      FAIL("expected NotSolvableError");
    } catch (const NotSolvableError& e) {
      CHECK(e.code() == ErrorCode::NotSolvable);
      CHECK(e.sum() == "1/2");
      CHECK(e.where().empty());
    }
  }

  TEST_CASE("heat solution is the kernel convolution") {
    const GeneratorSet s = unit_steps();
    const SupportedFunction f = line({{0, 1}, {2, q(-1, 3)}});
    CHECK(heat_solve(f, s, 3) == convolve(heat_kernel(s, 3).data, f));
    CHECK(heat_solve(f, s, 0) == f);
  }

  TEST_CASE("symbol") {
    const GeneratorSet s = unit_steps();
    const double t0[] = {0.0};
    CHECK(std::abs(symbol_eval(s, t0)) < 1e-15);
    const double tpi[] = {3.141592653589793};
    CHECK(symbol_eval(s, tpi).real() == doctest::Approx(4.0));
    const GroupSpec g = make_group(1, {4});
    const GeneratorSet t =
        validate_generators(g, {g.element({1, 0}), g.element({-1, 0}), g.element({0, 1}), g.element({0, 3})});
    CHECK(code_of([&] { symbol_eval(t, t0); }) == ErrorCode::TorsionUnsupported);
    const double two[] = {0.0, 0.0};
    CHECK(code_of([&] { symbol_eval(s, two); }) == ErrorCode::ShapeMismatch);
  }

  TEST_CASE("thread count does not change results") {
    const GroupSpec g = make_group(2);
    verify::Rng rng(7);
    const GeneratorSet s = verify::random_generator_set(g, rng, 6, 1);
    const SupportedFunction f = verify::random_function(g, rng, 8, 3);
    const Kernel k = heat_kernel(s, 14);
    const std::size_t saved = max_threads();
    set_max_threads(1);
    const SupportedFunction serial = convolve(f, k.data);
    set_max_threads(8);
    const SupportedFunction parallel = convolve(f, k.data);
    set_max_threads(saved);
    CHECK(serial == parallel);
  }
}
