#include "lattice_waves/cayley.hpp"
#include "lattice_waves/coset.hpp"

#include "test_support.hpp"

using namespace lattice_waves;
using lattice_waves::testing::code_of;
using lattice_waves::testing::q;

namespace {

const GroupSpec& base() {
  static const GroupSpec g = make_group(1, {4});
  return g;
}

std::vector<GroupElement> generators() {
  const GroupSpec& g = base();
  return {g.element({1, 0}), g.element({-1, 0}), g.element({0, 1}), g.element({0, 3})};
}

} // namespace

TEST_SUITE("coset") {
  TEST_CASE("coset graph of Z x Z_4 by <(0,2)>") {
    const CosetProblem p = build_coset_problem(base(), {base().element({0, 2})}, generators());
    CHECK(p.quotient_group().to_string() == "Z x Z_2");
    CHECK(p.h_order() == 2);
    // (0,1) and (0,3) lie in the same coset, so the quotient graph is 3-regular.
    CHECK(p.s_tilde.degree() == 3);
    CHECK(p.representatives.size() == 3);
  }

  TEST_CASE("validation") {
    const GroupSpec& g = base();
    auto s = generators();
    s.push_back(g.element({0, 2}));
    CHECK(code_of([&] { build_coset_problem(g, {g.element({0, 2})}, s); }) == ErrorCode::SInsideH);
    CHECK(code_of([&] { build_coset_problem(g, {g.element({1, 0})}, generators()); }) ==
          ErrorCode::InfiniteSubgroup);
  }

  TEST_CASE("lift and descend") {
    const CosetProblem p = build_coset_problem(base(), {base().element({0, 2})}, generators());
    const GroupSpec& qg = p.quotient_group();
    SupportedFunction f(qg);
    f.set(qg.element({0, 1}), q(2, 3));
    f.set(qg.element({-2, 0}), -1);
    const SupportedFunction lifted = lift(f, p);
    CHECK(lifted.support_size() == 4);
    CHECK(lifted(base().element({0, 3})) == q(2, 3));
    CHECK(descend(lifted, p) == f);

    SupportedFunction broken = lifted;
    broken.set(base().element({0, 3}), 5);
    CHECK(code_of([&] { descend(broken, p); }) == ErrorCode::CosetInconstant);
  }

  TEST_CASE("trivial subgroup reduces to the Cayley graph") {
    const CosetProblem p = build_coset_problem(base(), {base().identity()}, generators());
    CHECK(p.quotient_group() == base());
    SupportedFunction f = SupportedFunction::delta(base(), base().element({1, 1}));
    const GeneratorSet s = validate_generators(base(), generators());
    CHECK(coset_heat_solve(f, p, 5) == heat_solve(f, s, 5));
  }

  TEST_CASE("coset wave gate") {
    const CosetProblem p = build_coset_problem(base(), {base().element({0, 2})}, generators());
    const GroupSpec& qg = p.quotient_group();
    const SupportedFunction g = SupportedFunction::delta(qg, qg.identity());
    CHECK(code_of([&] { coset_wave_solve(SupportedFunction(qg), g, p, 3); }) == ErrorCode::NotSolvable);
  }
}
