#pragma once

#include <vector>

#include "pqdist/algebraic.hpp"
#include "pqdist/polynomial.hpp"
#include "pqdist/rational.hpp"

namespace pqdist {

/// Polynomial with rational coefficients, lowest degree first, trimmed.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coefficients);
  static RatPolynomial from_int(const IntPolynomial& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  RatPolynomial monic() const;
  RatPolynomial derivative() const;
  Rational eval(const Rational& x) const;
  /// Primitive integer polynomial with the same roots.
  IntPolynomial to_int() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& s, const RatPolynomial& a);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct RatDivision {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

RatDivision divide(const RatPolynomial& f, const RatPolynomial& g);
RatPolynomial rem(const RatPolynomial& f, const RatPolynomial& g);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) is not constant.
RatPolynomial inverse_mod(const RatPolynomial& a, const RatPolynomial& m);

/// Characteristic polynomial of multiplication by a on Q[x]/(m).
IntPolynomial norm_polynomial(const RatPolynomial& a, const RatPolynomial& m);

/// Trace of multiplication by a on Q[x]/(m), i.e. the sum of a over the roots of m.
Rational trace_mod(const RatPolynomial& a, const RatPolynomial& m);

/// Value a(alpha) as an algebraic number, where alpha is a root of m.
AlgebraicNumber evaluate_at(const RatPolynomial& a, const RatPolynomial& m,
                            const AlgebraicNumber& alpha);

}  // namespace pqdist
