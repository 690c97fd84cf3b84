#pragma once

#include <optional>
#include <vector>

#include "pqdist/algebraic.hpp"
#include "pqdist/matrix.hpp"
#include "pqdist/polynomial.hpp"

namespace pqdist {

struct Signature {
  int positives = 0;
  int negatives = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Integer polynomial equal to scale * det(xI - M).
struct CharPoly {
  IntPolynomial scaled;
  Integer scale;
};

IntPolynomial char_poly_int(const IntegerMatrix& m);
CharPoly char_poly(const RationalMatrix& m);

/// Signature of a real-rooted polynomial's roots by Descartes' rule.
Signature signature_from_char_poly(const IntPolynomial& p);
/// Same via Sturm counts on (-inf, 0) and (0, inf) (distinct roots weighted
/// by multiplicity through the square-free decomposition).
Signature signature_by_sturm(const IntPolynomial& p);

Signature signature(const RationalMatrix& m);
Signature signature(const IntegerMatrix& m);

/// Primitive integer form of the least polynomial q with q(M) j = 0.
IntPolynomial main_polynomial(const RationalMatrix& m);

struct SpectrumEntry {
  AlgebraicNumber eigenvalue;
  int multiplicity = 0;
  bool is_main = false;
  AlgebraicNumber beta_squared;
};

struct MainSpectrum {
  std::vector<SpectrumEntry> entries;  // increasing eigenvalue
};

MainSpectrum main_angles(const RationalMatrix& m);

struct HarmonicSum {
  int sign = 0;
  Rational value;  // j^T x / n for any solution of M x = j
};

/// Sign of sum over main eigenvalues of beta^2 / lambda. Throws JNotInRange
/// when M x = j has no solution.
HarmonicSum harmonic_main_sum_sign(const RationalMatrix& m);

/// Exact solution of M x = b over Q (any particular solution), or nullopt.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

Integer determinant(const IntegerMatrix& m);
int rank(const RationalMatrix& m);

/// char(x) of the pencil B0 + t B1, coefficients[i][k] multiplying x^i t^k,
/// divided by scale^order to get the characteristic polynomial of the pencil
/// the caller scaled.
struct BivariateCharPoly {
  std::vector<std::vector<Integer>> coefficients;
  Integer scale = 1;
  int order = 0;

  /// Coefficient of x^i as a polynomial in t.
  IntPolynomial x_coefficient(int i) const;
  /// Substitutes a rational t.
  IntPolynomial at(const Rational& t) const;
};

BivariateCharPoly pencil_char_poly(const IntegerMatrix& b0, const IntegerMatrix& b1,
                                   const Integer& scale = 1);

/// char(x) of -(a_sign A1 + t A2) for 0/1 relation matrices with A1 + A2 = J - I.
BivariateCharPoly char_poly_bivariate(const IntegerMatrix& a1, const IntegerMatrix& a2,
                                      int a_sign);

/// Signature of the pencil at t = b via coefficient signs and Descartes' rule.
Signature signature_at_algebraic(const BivariateCharPoly& bi, const AlgebraicNumber& b);

}  // namespace pqdist
