#include "lattice_waves/rational.hpp"

#include "test_support.hpp"

using namespace lattice_waves;
using lattice_waves::testing::code_of;
using lattice_waves::testing::q;

TEST_SUITE("rational") {
  TEST_CASE("parsing normalises") {
    CHECK(make_rational("6", "4") == q(3, 2));
    CHECK(make_rational("-6", "-4") == q(3, 2));
    CHECK(make_rational("5") == 5);
    const Rational big = make_rational("123456789012345678901234567890", "3");
    CHECK(numerator_string(big) == "41152263004115226300411522630");
    CHECK(denominator_string(q(-1, 3)) == "3");
    CHECK(numerator_string(q(-1, 3)) == "-1");
  }

  TEST_CASE("bad input") {
    CHECK(code_of([] { make_rational("1", "0"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { make_rational("1.5"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { make_rational(""); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("binomials and powers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(ipow(Integer(3), 4) == 81);
    CHECK(ipow(Integer(7), 0) == 1);
    CHECK(to_double(q(1, 4)) == doctest::Approx(0.25));
  }
}
