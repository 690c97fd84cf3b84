#include "pqdist/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pqdist/errors.hpp"

namespace pqdist {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_rationals(const std::vector<Rational>& coefficients) {
  Integer l = 1;
  for (const auto& c : coefficients) lcm_into(l, c.get_den());
  std::vector<Integer> v;
  v.reserve(coefficients.size());
  for (const auto& c : coefficients) {
    Rational s = c * l;
    v.push_back(s.get_num());
  }
  return IntPolynomial(std::move(v)).primitive();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    gcd_into(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  if (g == 1) return *this;
  std::vector<Integer> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reflect() const {
  std::vector<Integer> v = coeffs_;
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::strip_zero_roots(int* removed) const {
  size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  if (removed) *removed = static_cast<int>(k);
  if (k == 0) return *this;
  return IntPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

int IntPolynomial::sign_at(const Rational& r) const {
  if (is_zero()) return 0;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (den == 1) {
    Integer acc = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) {
      acc *= num;
      acc += coeffs_[static_cast<size_t>(k)];
    }
    return sgn(acc);
  }
  // den^d p(num/den) by homogeneous Horner.
  Integer acc = coeffs_.back();
  Integer dpow = den;
  for (int k = degree() - 1; k >= 0; --k) {
    acc *= num;
    acc += coeffs_[static_cast<size_t>(k)] * dpow;
    dpow *= den;
  }
  return sgn(acc);
}

Rational IntPolynomial::eval(const Rational& r) const {
  Rational acc = 0;
  for (int k = degree(); k >= 0; --k) {
    acc *= r;
    acc += Rational(coeffs_[static_cast<size_t>(k)]);
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  std::vector<Integer> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) out << a.get_str();
    if (k >= 1) {
      if (a != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
  int dg = g.degree();
  if (f.degree() < dg) return f;
  std::vector<Integer> r = f.coefficients();
  const auto& gc = g.coefficients();
  const Integer& lc = g.leading();
  int steps = f.degree() - dg + 1;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= dg) {
    int dr = static_cast<int>(r.size()) - 1;
    Integer t = r.back();
    for (auto& x : r) x *= lc;
    int shift = dr - dg;
    for (int i = 0; i <= dg; ++i) r[static_cast<size_t>(i + shift)] -= t * gc[static_cast<size_t>(i)];
    --steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  if (steps > 0) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& x : r) x *= m;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (f.is_zero()) return {};
  int dg = g.degree();
  int df = f.degree();
  if (df < dg) throw DomainError("exact_quotient: inexact division");
  std::vector<Integer> r = f.coefficients();
  std::vector<Integer> q(static_cast<size_t>(df - dg + 1));
  const auto& gc = g.coefficients();
  const Integer& lc = g.leading();
  for (int k = df - dg; k >= 0; --k) {
    Integer& top = r[static_cast<size_t>(k + dg)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
      throw DomainError("exact_quotient: inexact division");
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    q[static_cast<size_t>(k)] = t;
    for (int i = 0; i <= dg; ++i) r[static_cast<size_t>(i + k)] -= t * gc[static_cast<size_t>(i)];
  }
  for (const auto& x : r)
    if (x != 0) throw DomainError("exact_quotient: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  IntPolynomial a = f.primitive();
  IntPolynomial b = g.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPolynomial{1};
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

std::vector<SquarefreeFactor> squarefree_decompose(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree_decompose of zero polynomial");
  std::vector<SquarefreeFactor> out;
  IntPolynomial a = p.primitive();
  if (a.degree() == 0) return out;
  IntPolynomial b = a.derivative();
  IntPolynomial c = gcd(a, b);
  IntPolynomial w = exact_quotient(a, c);
  IntPolynomial y = exact_quotient(b, c);
  IntPolynomial z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPolynomial g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree_part of zero polynomial");
  IntPolynomial a = p.primitive();
  if (a.degree() <= 1) return a;
  IntPolynomial g = gcd(a, a.derivative());
  if (g.degree() == 0) return a;
  return exact_quotient(a, g).primitive();
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

int sign_variations(const std::vector<Integer>& coefficients) {
  int last = 0;
  int changes = 0;
  for (const auto& c : coefficients) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

IntPolynomial homogeneous_substitute(const IntPolynomial& p, const IntPolynomial& num,
                                     const IntPolynomial& den) {
  int d = p.degree();
  if (d < 0) return {};
  std::vector<IntPolynomial> num_pow(static_cast<size_t>(d) + 1), den_pow(static_cast<size_t>(d) + 1);
  num_pow[0] = IntPolynomial{1};
  den_pow[0] = IntPolynomial{1};
  for (int k = 1; k <= d; ++k) {
    num_pow[static_cast<size_t>(k)] = num_pow[static_cast<size_t>(k - 1)] * num;
    den_pow[static_cast<size_t>(k)] = den_pow[static_cast<size_t>(k - 1)] * den;
  }
  IntPolynomial acc;
  for (int k = 0; k <= d; ++k) {
    const Integer c = p.coeff(k);
    if (c == 0) continue;
    acc = acc + c * (num_pow[static_cast<size_t>(k)] * den_pow[static_cast<size_t>(d - k)]);
  }
  return acc;
}

}  // namespace pqdist
