#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pqdist/rational.hpp"

namespace pqdist {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, int degree);
  /// Clears denominators of a rational coefficient list and returns the
  /// primitive integer polynomial with the same roots.
  static IntPolynomial from_rationals(const std::vector<Rational>& coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Integer coeff(int k) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;
  IntPolynomial derivative() const;
  /// p(-x).
  IntPolynomial reflect() const;
  /// Removes the factor x^k with the largest k.
  IntPolynomial strip_zero_roots(int* removed = nullptr) const;

  /// Sign of p(r), computed exactly in integers.
  int sign_at(const Rational& r) const;
  Rational eval(const Rational& r) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// lc(g)^(deg f - deg g + 1) * f mod g.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Quotient of f by g when g divides f over Q and g is primitive (so the
/// quotient is integral). Throws DomainError if the division is not exact.
IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& g);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity = 0;
};

/// Yun's decomposition. Factors are primitive, square-free and pairwise
/// coprime; the product of factor^multiplicity equals p up to a constant.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPolynomial& p);

/// Primitive square-free part p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

bool is_squarefree(const IntPolynomial& p);

/// Sign changes in a coefficient list, zeros skipped.
int sign_variations(const std::vector<Integer>& coefficients);

/// (a x + b)^k expansions are used for root transforms: returns
/// sum_k p_k (num(y))^k (den(y))^(deg - k) for linear num/den.
IntPolynomial homogeneous_substitute(const IntPolynomial& p,
                                     const IntPolynomial& num,
                                     const IntPolynomial& den);

}  // namespace pqdist
