#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lattice_waves {

// Exact scalar used for every function value, kernel coefficient and weight.
// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

// Parses decimal numerator/denominator strings; throws Error(InvalidInput) on
// malformed text or a zero denominator.
Rational make_rational(std::string_view num, std::string_view den = "1");

Integer binomial(long n, long k);

// Exact power of a non-negative base.
Integer ipow(const Integer& base, unsigned long exponent);

double to_double(const Rational& q);

} // namespace lattice_waves
