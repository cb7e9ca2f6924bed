#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/smith_normal_form.hpp"

#include "test_support.hpp"

#include <algorithm>

using namespace lattice_waves;
using lattice_waves::testing::code_of;

TEST_SUITE("abelian-group") {
  TEST_CASE("elements are canonical") {
    const GroupSpec g = make_group(1, {4});
    CHECK(g.to_string() == "Z x Z_4");
    CHECK(g.dimension() == 2);
    CHECK_FALSE(g.is_finite());
    const GroupElement x = g.element({5, 6});
    CHECK(x.to_string() == "5;2");
    CHECK(g.element({5, -2}) == x);
    CHECK(g.add(x, g.element({1, 3})) == g.element({6, 1}));
    CHECK(g.neg(g.element({1, 1})) == g.element({-1, 3}));
    CHECK(g.identity().is_zero());
    CHECK(make_group(0, {2, 3}).torsion_order() == 6);
  }

  TEST_CASE("group validation") {
    CHECK(code_of([] { make_group(-1); }) == ErrorCode::ModulusOutOfRange);
    CHECK(code_of([] { make_group(1, {1}); }) == ErrorCode::ModulusOutOfRange);
    const GroupSpec g = make_group(2);
    CHECK(code_of([&] { g.element({1}); }) == ErrorCode::ShapeMismatch);
  }

  TEST_CASE("generating sets") {
    const GroupSpec z = make_group(1);
    const GeneratorSet s = validate_generators(z, {z.element({1}), z.element({-1})});
    CHECK(s.degree() == 2);
    CHECK(code_of([&] { validate_generators(z, {}); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([&] { validate_generators(z, {z.element({0}), z.element({1}), z.element({-1})}); }) ==
          ErrorCode::ContainsIdentity);
    CHECK(code_of([&] { validate_generators(z, {z.element({1})}); }) == ErrorCode::NotSymmetric);
    CHECK(code_of([&] { validate_generators(z, {z.element({2}), z.element({-2})}); }) ==
          ErrorCode::DoesNotGenerate);
    CHECK(code_of([&] { validate_generators(z, {z.element({1}), z.element({-1}), z.element({1})}); }) ==
          ErrorCode::DuplicateGenerator);
    const GroupSpec other = make_group(2);
    CHECK(code_of([&] { validate_generators(z, {other.element({1, 0})}); }) == ErrorCode::ShapeMismatch);

    const GroupSpec zz = make_group(1, {4});
    CHECK(generates(zz, std::vector{zz.element({1, 0}), zz.element({-1, 0}), zz.element({0, 1}),
                                    zz.element({0, 3})}));
    CHECK_FALSE(generates(zz, std::vector{zz.element({1, 0}), zz.element({-1, 0}), zz.element({0, 2})}));
    // {+-2, +-3} generates Z although no generator is a unit.
    CHECK(generates(z, std::vector{z.element({2}), z.element({-2}), z.element({3}), z.element({-3})}));
  }

  TEST_CASE("smith normal form") {
    IntMatrix a{{Integer(2), Integer(4)}, {Integer(6), Integer(8)}};
    const SmithForm sf = smith_normal_form(a, 2);
    REQUIRE(sf.diagonal.size() == 2);
    CHECK(sf.diagonal[0] == 2);
    CHECK(sf.diagonal[1] == 4);
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<Integer> e(2, Integer(0));
      e[i] = 1;
      CHECK(row_times(row_times(e, sf.column_transform), sf.column_inverse) == e);
    }
  }

  TEST_CASE("quotient by a finite subgroup") {
    const GroupSpec g = make_group(1, {4});
    const std::vector<GroupElement> h{g.element({0, 2})};
    const Quotient q = quotient(g, h);
    CHECK(q.target().to_string() == "Z x Z_2");
    CHECK(q.subgroup_order() == 2);
    CHECK(q.project(g.element({0, 3})) == q.target().element({0, 1}));
    CHECK(q.project(g.element({7, 2})) == q.target().element({7, 0}));
    const auto fiber = q.fiber(q.target().element({0, 1}));
    CHECK(fiber == std::vector{g.element({0, 1}), g.element({0, 3})});
    for (const auto& y : fiber) CHECK(q.project(q.representative(q.project(y))) == q.project(y));

    const GroupSpec z6 = make_group(0, {6});
    const Quotient q6 = quotient(z6, std::vector{z6.element({2})});
    CHECK(q6.target().torsion_order() == 2);
    CHECK(q6.subgroup_order() == 3);

    const GroupSpec z = make_group(1);
    CHECK(code_of([&] { quotient(z, std::vector{z.element({1})}); }) == ErrorCode::InfiniteSubgroup);

    const Quotient trivial = quotient(g, std::vector{g.identity()});
    CHECK(trivial.target() == g);
    CHECK(trivial.project(g.element({3, 3})) == g.element({3, 3}));
  }

  TEST_CASE("word distances") {
    const GroupSpec z = make_group(1);
    const GeneratorSet s = validate_generators(z, {z.element({1}), z.element({-1})});
    const auto d = word_distances(s, 3);
    CHECK(d.size() == 7);
    CHECK(d.at(z.element({-3})) == 3);
    CHECK(d.at(z.identity()) == 0);
  }
}
