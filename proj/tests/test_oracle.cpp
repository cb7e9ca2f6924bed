#include "lattice_waves/cayley.hpp"
#include "lattice_waves/coset.hpp"
#include "lattice_waves/oracle.hpp"

#include "test_support.hpp"

using namespace lattice_waves;
using lattice_waves::testing::code_of;

namespace {

const GroupSpec& z() {
  static const GroupSpec g = make_group(1);
  return g;
}

GeneratorSet unit_steps() { return validate_generators(z(), {z().element({1}), z().element({-1})}); }

SupportedFunction line(std::initializer_list<std::pair<long, long>> values) {
  SupportedFunction f(z());
  for (const auto& [x, v] : values) f.set(z().element({x}), v);
  return f;
}

} // namespace

TEST_SUITE("oracle") {
  TEST_CASE("cayley steps") {
    const GeneratorSet s = unit_steps();
    CHECK(oracle::cayley_heat_step(line({{0, 1}}), s) == line({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(oracle::cayley_heat_step(SupportedFunction(z()), s).is_zero());
    const SupportedFunction zero(z());
    CHECK(oracle::cayley_wave_step(line({{0, 1}}), line({{0, 1}}), s) == line({{-1, 1}, {0, -1}, {1, 1}}));
    const auto traj = oracle::cayley_wave_trajectory(zero, line({{1, 1}, {-1, -1}}), s, 2);
    CHECK(traj[2] == line({{1, 2}, {-1, -2}}));
    CHECK(oracle::laplacian(line({{0, 1}}), s) == line({{-1, -1}, {0, 2}, {1, -1}}));
  }

  TEST_CASE("lifted coset step with a trivial subgroup is the Cayley step") {
    const GroupSpec g = make_group(1, {4});
    const std::vector<GroupElement> s{g.element({1, 0}), g.element({-1, 0}), g.element({0, 1}), g.element({0, 3})};
    const CosetProblem p = build_coset_problem(g, {g.identity()}, s);
    const SupportedFunction u = SupportedFunction::delta(g, g.element({2, 1}));
    CHECK(oracle::lifted_coset_heat_step(u, p) == oracle::cayley_heat_step(u, validate_generators(g, s)));
  }

  TEST_CASE("lifted coset step rejects inconstant data") {
    const GroupSpec g = make_group(1, {4});
    const std::vector<GroupElement> s{g.element({1, 0}), g.element({-1, 0}), g.element({0, 1}), g.element({0, 3})};
    const CosetProblem p = build_coset_problem(g, {g.element({0, 2})}, s);
    const SupportedFunction u = SupportedFunction::delta(g, g.element({0, 1}));
    CHECK_FALSE(oracle::is_coset_constant(u, p));
    CHECK(code_of([&] { oracle::lifted_coset_heat_step(u, p); }) == ErrorCode::CosetInconstant);
    const SupportedFunction lifted = lift(SupportedFunction::delta(p.quotient_group(), p.quotient_group().identity()), p);
    const SupportedFunction stepped = oracle::lifted_coset_heat_step(lifted, p);
    CHECK(oracle::is_coset_constant(stepped, p));
    CHECK(descend(stepped, p) == coset_heat_solve(descend(lifted, p), p, 1));
  }

  TEST_CASE("tree steps") {
    TreeFunction root(3);
    root.set(TreeVertex{}, 1);
    const TreeFunction u = oracle::tree_heat_step(root);
    CHECK(u(TreeVertex{}) == -2);
    for (int i = 1; i <= 3; ++i) {
      const std::vector<int> w{i};
      CHECK(u(TreeVertex::from_letters(w, 3)) == 1);
    }
    Rational mass = 0;
    const TreeFunction u2 = oracle::tree_heat_step(u);
    for (const auto& [x, val] : u2.entries()) mass += val;
    CHECK(mass == 1);
  }

  TEST_CASE("path steps") {
    const std::vector<Rational> radial{1};
    const oracle::PathProfile u = oracle::path_heat_step(oracle::even_profile(radial), 3);
    // Direct substitution into v(r) <- 2 v(r+1) + v(r-1) - 2 v(r).
    CHECK(u.at(-1) == 2);
    CHECK(u.at(0) == -2);
    CHECK(u.at(1) == 1);
    const oracle::PathProfile w = oracle::path_heat_step(oracle::even_profile(radial), 2);
    CHECK(w.at(-1) == w.at(1));

    const oracle::RadialProfile m = oracle::radial_heat_step(oracle::radial_heat_step(radial, 3), 3);
    CHECK(m[0] == 7);
  }

  TEST_CASE("quadrature") {
    const GeneratorSet s = unit_steps();
    CHECK(oracle::quadrature_kernel(s, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracle::quadrature_kernel(s, 2, 0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(oracle::quadrature_kernel(s, 2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracle::quadrature_kernel(s, 2, -1) == doctest::Approx(-2.0).epsilon(1e-12));
    const GroupSpec g = make_group(1, {4});
    const GeneratorSet t =
        validate_generators(g, {g.element({1, 0}), g.element({-1, 0}), g.element({0, 1}), g.element({0, 3})});
    CHECK(code_of([&] { oracle::quadrature_kernel(t, 2, 0); }) == ErrorCode::TorsionUnsupported);
  }
}
