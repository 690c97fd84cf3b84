#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pqdist {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or "num"; the result is canonical.
Rational parse_rational(std::string_view text);

/// Exact decimal-free form: "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline void lcm_into(Integer& acc, const Integer& x) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
}

inline void gcd_into(Integer& acc, const Integer& x) {
  mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
}

/// Smallest power of two 2^k (k >= 0) with 2^k >= |value|.
Integer power_of_two_at_least(const Rational& value);

}  // namespace pqdist
