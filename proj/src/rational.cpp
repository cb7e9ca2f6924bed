#include "lattice_waves/rational.hpp"

#include "lattice_waves/error.hpp"

#include <cctype>

namespace lattice_waves {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s))
    throw Error(ErrorCode::InvalidInput, "not a decimal integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational make_rational(std::string_view num, std::string_view den) {
  Integer n = parse_integer(num);
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

} // namespace lattice_waves
