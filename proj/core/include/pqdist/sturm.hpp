#pragma once

#include <vector>

#include "pqdist/polynomial.hpp"

namespace pqdist {

/// Sturm chain of p: p, p', then negated pseudo-remainders scaled to
/// primitive form. Counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  const std::vector<IntPolynomial>& chain() const { return chain_; }
  const IntPolynomial& source() const { return chain_.front(); }

  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;

  /// Distinct roots in (lo, hi). Throws EndpointIsRoot if p(lo) = 0 or p(hi) = 0.
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct roots in (lo, hi]; p(lo) must be nonzero, p(hi) may vanish.
  int count_half_open(const Rational& lo, const Rational& hi) const;
  int count_real_roots() const;

 private:
  std::vector<IntPolynomial> chain_;
};

int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Smallest power of two strictly greater than every |root| of p (Cauchy bound).
Rational cauchy_bound(const IntPolynomial& p);

}  // namespace pqdist
