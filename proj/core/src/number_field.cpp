#include "pqdist/number_field.hpp"

#include <algorithm>

#include "pqdist/errors.hpp"
#include "pqdist/matrix.hpp"

namespace pqdist {

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

RatPolynomial RatPolynomial::from_int(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<size_t>(k)];
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

RatPolynomial RatPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return RatPolynomial(std::move(v));
}

Rational RatPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<size_t>(k)];
  return acc;
}

IntPolynomial RatPolynomial::to_int() const { return IntPolynomial::from_rationals(c_); }

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const Rational& s, const RatPolynomial& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return RatPolynomial(std::move(v));
}

RatDivision divide(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<Rational> r = f.coefficients();
  int dg = g.degree();
  int df = f.degree();
  if (df < dg) return {RatPolynomial(), f};
  std::vector<Rational> q(static_cast<size_t>(df - dg + 1));
  Rational inv = 1 / g.leading();
  for (int k = df - dg; k >= 0; --k) {
    Rational t = r[static_cast<size_t>(k + dg)] * inv;
    q[static_cast<size_t>(k)] = t;
    if (t == 0) continue;
    for (int i = 0; i <= dg; ++i) r[static_cast<size_t>(k + i)] -= t * g.coeff(i);
  }
  r.resize(static_cast<size_t>(dg));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial rem(const RatPolynomial& f, const RatPolynomial& g) { return divide(f, g).remainder; }

RatPolynomial inverse_mod(const RatPolynomial& a, const RatPolynomial& m) {
  // Extended Euclid tracking the coefficient of a.
  RatPolynomial r0 = m, r1 = rem(a, m);
  RatPolynomial s0, s1 = RatPolynomial(std::vector<Rational>{Rational(1)});
  while (!r1.is_zero()) {
    RatDivision d = divide(r0, r1);
    RatPolynomial r2 = d.remainder;
    RatPolynomial s2 = s0 - d.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DomainError("element is a zero divisor modulo m");
  return rem((1 / r0.leading()) * s0, m);
}

namespace {

RationalMatrix multiplication_matrix(const RatPolynomial& a, const RatPolynomial& m) {
  const int r = m.degree();
  RationalMatrix mat(static_cast<size_t>(r), static_cast<size_t>(r));
  RatPolynomial col = rem(a, m);
  RatPolynomial x(std::vector<Rational>{Rational(0), Rational(1)});
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) mat(static_cast<size_t>(i), static_cast<size_t>(j)) = col.coeff(i);
    col = rem(col * x, m);
  }
  return mat;
}

}  // namespace

IntPolynomial norm_polynomial(const RatPolynomial& a, const RatPolynomial& m) {
  if (m.degree() < 1) throw DomainError("modulus must have positive degree");
  std::vector<Rational> c = berkowitz(multiplication_matrix(a, m));
  return IntPolynomial::from_rationals(c);
}

Rational trace_mod(const RatPolynomial& a, const RatPolynomial& m) {
  RationalMatrix mat = multiplication_matrix(a, m);
  Rational t = 0;
  for (size_t i = 0; i < mat.rows(); ++i) t += mat(i, i);
  return t;
}

AlgebraicNumber evaluate_at(const RatPolynomial& a, const RatPolynomial& m,
                            const AlgebraicNumber& alpha) {
  if (alpha.is_rational()) return AlgebraicNumber::from_rational(a.eval(alpha.lo));
  RatPolynomial ar = rem(a, m);
  if (ar.degree() <= 0) return AlgebraicNumber::from_rational(ar.coeff(0));
  IntPolynomial n = norm_polynomial(ar, m);
  std::vector<AlgebraicNumber> roots = isolate_roots(n);
  // Integer numerator and common denominator of ar for interval evaluation.
  Integer den = 1;
  for (const auto& c : ar.coefficients()) lcm_into(den, c.get_den());
  std::vector<Integer> num;
  for (const auto& c : ar.coefficients()) num.push_back(Rational(c * den).get_num());
  IntPolynomial numer(std::move(num));
  AlgebraicNumber x = alpha;
  while (true) {
    auto [lo, hi] = interval_eval(numer, x.lo, x.hi);
    lo /= den;
    hi /= den;
    int hits = 0;
    size_t which = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
      const AlgebraicNumber& r = roots[i];
      if (r.hi < lo || r.lo > hi) continue;
      ++hits;
      which = i;
    }
    if (hits == 1) return roots[which];
    if (hits == 0) throw DomainError("evaluate_at: no matching conjugate");
    bisect(x);
    if (x.is_rational()) return AlgebraicNumber::from_rational(a.eval(x.lo));
    for (auto& r : roots) {
      if (!r.is_rational() && !(r.hi < lo || r.lo > hi)) bisect(r);
    }
  }
}

}  // namespace pqdist
