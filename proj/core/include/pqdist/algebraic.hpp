#pragma once

#include <string>
#include <vector>

#include "pqdist/polynomial.hpp"
#include "pqdist/rational.hpp"

namespace pqdist {

/// A real algebraic number given by a square-free primitive integer
/// polynomial and a rational isolating interval. When lo == hi the number is
/// that rational exactly; otherwise poly has exactly one root in (lo, hi) and
/// does not vanish at either endpoint.
struct AlgebraicNumber {
  IntPolynomial poly;
  Rational lo;
  Rational hi;

  static AlgebraicNumber from_rational(const Rational& r);

  bool is_rational() const { return lo == hi; }
  /// Exact value when is_rational().
  const Rational& rational_value() const { return lo; }
  double approx() const;
  /// Decimal expansion rounded to the given number of fractional digits.
  std::string decimal(int digits = 12) const;
  /// "poly in (lo, hi)" or the rational value.
  std::string to_string() const;
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Real roots of p in increasing order, each carried by the square-free part of p.
std::vector<AlgebraicNumber> isolate_roots(const IntPolynomial& p);

/// Real roots of p strictly inside (lo, hi); endpoints must not be roots of
/// the square-free part.
std::vector<AlgebraicNumber> isolate_roots_in(const IntPolynomial& p, const Rational& lo,
                                              const Rational& hi);

/// Narrows the interval to width at most `width` by sign bisection.
AlgebraicNumber refine(const AlgebraicNumber& alpha, const Rational& width);

/// One bisection step in place.
void bisect(AlgebraicNumber& alpha);

/// Sign of expr(alpha).
int alg_sign(const IntPolynomial& expr, const AlgebraicNumber& alpha);

Ordering alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
Ordering alg_compare(const AlgebraicNumber& a, const Rational& r);
bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// (a*alpha + b) / (c*alpha + d) for integers with ad - bc != 0 and a
/// nonvanishing denominator.
AlgebraicNumber mobius(const AlgebraicNumber& alpha, long a, long b, long c, long d);

/// Bounds of p over the rational interval [lo, hi] by interval Horner.
std::pair<Rational, Rational> interval_eval(const IntPolynomial& p, const Rational& lo,
                                            const Rational& hi);

/// Same number carried by its minimal polynomial when the factor search
/// succeeds (numeric candidate factors confirmed by exact division).
AlgebraicNumber minimal_form(const AlgebraicNumber& alpha);

/// Converts a rational to a decimal string with the given fractional digits.
std::string rational_decimal(const Rational& r, int digits);

}  // namespace pqdist
