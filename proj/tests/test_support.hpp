#pragma once

#include "lattice_waves/error.hpp"
#include "lattice_waves/rational.hpp"

#include <doctest.h>

#include <functional>

namespace lattice_waves::testing {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidInput;
}

} // namespace lattice_waves::testing
