#include "pqdist/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "pqdist/errors.hpp"
#include "pqdist/sturm.hpp"

namespace pqdist {

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  AlgebraicNumber a;
  a.poly = IntPolynomial(std::vector<Integer>{-r.get_num(), r.get_den()});
  a.lo = r;
  a.hi = r;
  return a;
}

double AlgebraicNumber::approx() const {
  if (is_rational()) return lo.get_d();
  AlgebraicNumber t = refine(*this, Rational(1, 1) / Rational(Integer(1) << 60));
  Rational mid = (t.lo + t.hi) / 2;
  return mid.get_d();
}

std::string rational_decimal(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational s = r * scale;
  bool negative = s < 0;
  if (negative) s = -s;
  Integer q = (s.get_num() * 2 + s.get_den()) / (s.get_den() * 2);
  std::string body = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits)
      body = std::string(static_cast<size_t>(digits) - body.size() + 1, '0') + body;
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  if (negative && q != 0) body = "-" + body;
  return body;
}

std::string AlgebraicNumber::decimal(int digits) const {
  if (is_rational()) return rational_decimal(lo, digits);
  Integer scale = 1;
  for (int i = 0; i < digits + 2; ++i) scale *= 10;
  AlgebraicNumber t = refine(*this, Rational(1) / Rational(scale));
  return rational_decimal((t.lo + t.hi) / 2, digits);
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return pqdist::to_string(lo);
  return "root of " + poly.to_string() + " in (" + pqdist::to_string(lo) + ", " +
         pqdist::to_string(hi) + ")";
}

namespace {

AlgebraicNumber make_root(const IntPolynomial& q, const Rational& lo, const Rational& hi) {
  if (q.degree() == 1) {
    Rational r(-q.coeff(0), q.coeff(1));
    r.canonicalize();
    return AlgebraicNumber::from_rational(r);
  }
  AlgebraicNumber a;
  a.poly = q;
  a.lo = lo;
  a.hi = hi;
  return a;
}

void isolate_rec(const IntPolynomial& q, const SturmSequence& s, const Rational& lo,
                 const Rational& hi, int vlo, int vhi, std::vector<AlgebraicNumber>& out) {
  int n = vlo - vhi;
  if (n == 0) return;
  if (n == 1) {
    out.push_back(make_root(q, lo, hi));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (q.sign_at(mid) == 0) {
    // Root at the midpoint: shrink a symmetric gap around it until clean.
    Rational h = (hi - lo) / 4;
    while (true) {
      Rational a = mid - h;
      Rational b = mid + h;
      if (q.sign_at(a) != 0 && q.sign_at(b) != 0 && s.count(a, b) == 1) {
        int va = s.variations_at(a);
        int vb = s.variations_at(b);
        isolate_rec(q, s, lo, a, vlo, va, out);
        out.push_back(AlgebraicNumber::from_rational(mid));
        isolate_rec(q, s, b, hi, vb, vhi, out);
        return;
      }
      h /= 2;
    }
  }
  int vm = s.variations_at(mid);
  isolate_rec(q, s, lo, mid, vlo, vm, out);
  isolate_rec(q, s, mid, hi, vm, vhi, out);
}

}  // namespace

std::vector<AlgebraicNumber> isolate_roots_in(const IntPolynomial& p, const Rational& lo,
                                              const Rational& hi) {
  if (p.is_zero()) throw DomainError("isolate_roots of zero polynomial");
  std::vector<AlgebraicNumber> out;
  IntPolynomial q = squarefree_part(p);
  if (q.degree() < 1) return out;
  SturmSequence s(q);
  if (q.sign_at(lo) == 0 || q.sign_at(hi) == 0)
    throw EndpointIsRoot("isolation interval endpoint is a root");
  isolate_rec(q, s, lo, hi, s.variations_at(lo), s.variations_at(hi), out);
  return out;
}

std::vector<AlgebraicNumber> isolate_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("isolate_roots of zero polynomial");
  IntPolynomial q = squarefree_part(p);
  if (q.degree() < 1) return {};
  Rational b = cauchy_bound(q);
  return isolate_roots_in(q, -b, b);
}

void bisect(AlgebraicNumber& alpha) {
  if (alpha.is_rational()) return;
  Rational mid = (alpha.lo + alpha.hi) / 2;
  int sm = alpha.poly.sign_at(mid);
  if (sm == 0) {
    alpha = AlgebraicNumber::from_rational(mid);
    return;
  }
  if (sm == alpha.poly.sign_at(alpha.lo))
    alpha.lo = mid;
  else
    alpha.hi = mid;
}

AlgebraicNumber refine(const AlgebraicNumber& alpha, const Rational& width) {
  if (width <= 0) throw DomainError("refine width must be positive");
  AlgebraicNumber a = alpha;
  while (!a.is_rational() && a.hi - a.lo > width) bisect(a);
  return a;
}

std::pair<Rational, Rational> interval_eval(const IntPolynomial& p, const Rational& lo,
                                            const Rational& hi) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  Rational a = Rational(p.leading());
  Rational b = a;
  for (int k = p.degree() - 1; k >= 0; --k) {
    Rational c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
    a = std::min({c1, c2, c3, c4});
    b = std::max({c1, c2, c3, c4});
    Rational c(p.coeff(k));
    a += c;
    b += c;
  }
  return {a, b};
}

int alg_sign(const IntPolynomial& expr, const AlgebraicNumber& alpha) {
  if (expr.is_zero()) return 0;
  if (alpha.is_rational()) return expr.sign_at(alpha.lo);
  if (expr.degree() == 0) return sgn(expr.leading());
  auto quick = interval_eval(expr, alpha.lo, alpha.hi);
  if (quick.first > 0) return 1;
  if (quick.second < 0) return -1;
  IntPolynomial g = gcd(expr, alpha.poly);
  if (g.degree() >= 1 && sturm_count(g, alpha.lo, alpha.hi) > 0) return 0;
  AlgebraicNumber a = alpha;
  while (true) {
    bisect(a);
    if (a.is_rational()) return expr.sign_at(a.lo);
    auto bounds = interval_eval(expr, a.lo, a.hi);
    if (bounds.first > 0) return 1;
    if (bounds.second < 0) return -1;
  }
}

Ordering alg_compare(const AlgebraicNumber& a, const Rational& r) {
  if (a.is_rational()) {
    if (a.lo < r) return Ordering::Less;
    if (a.lo > r) return Ordering::Greater;
    return Ordering::Equal;
  }
  if (r <= a.lo) return Ordering::Greater;
  if (r >= a.hi) return Ordering::Less;
  int s = a.poly.sign_at(r);
  if (s == 0) return Ordering::Equal;
  // a lies in (lo, r) iff the sign changes there.
  return (s == a.poly.sign_at(a.lo)) ? Ordering::Greater : Ordering::Less;
}

Ordering alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.is_rational()) return alg_compare(a, b.lo);
  if (a.is_rational()) {
    Ordering o = alg_compare(b, a.lo);
    return static_cast<Ordering>(-static_cast<int>(o));
  }
  if (a.hi <= b.lo) return Ordering::Less;
  if (b.hi <= a.lo) return Ordering::Greater;
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  IntPolynomial g = gcd(a.poly, b.poly);
  if (g.degree() >= 1 && sturm_count(g, lo, hi) > 0) return Ordering::Equal;
  AlgebraicNumber x = a;
  AlgebraicNumber y = b;
  while (true) {
    if (x.hi - x.lo >= y.hi - y.lo)
      bisect(x);
    else
      bisect(y);
    if (x.is_rational() || y.is_rational()) return alg_compare(x, y);
    if (x.hi <= y.lo) return Ordering::Less;
    if (y.hi <= x.lo) return Ordering::Greater;
  }
}

bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_compare(a, b) == Ordering::Equal;
}

AlgebraicNumber mobius(const AlgebraicNumber& alpha, long a, long b, long c, long d) {
  if (Integer(a) * d - Integer(b) * c == 0) throw DomainError("degenerate Mobius map");
  auto apply = [&](const Rational& x) -> Rational { return (a * x + b) / (c * x + d); };
  if (alpha.is_rational()) {
    Rational den = c * alpha.lo + d;
    if (den == 0) throw DomainError("Mobius pole at the algebraic number");
    return AlgebraicNumber::from_rational(apply(alpha.lo));
  }
  AlgebraicNumber x = alpha;
  if (c != 0) {
    Rational pole(-d, c);
    pole.canonicalize();
    if (alpha.poly.sign_at(pole) == 0 && alg_compare(alpha, pole) == Ordering::Equal)
      throw DomainError("Mobius pole at the algebraic number");
    while (!x.is_rational() && x.lo <= pole && pole <= x.hi) bisect(x);
    if (x.is_rational()) return mobius(x, a, b, c, d);
  }
  // alpha = (d y - b) / (a - c y)
  IntPolynomial num{-b, d};
  IntPolynomial den{a, -c};
  IntPolynomial q = squarefree_part(homogeneous_substitute(x.poly, num, den));
  Rational u = apply(x.lo);
  Rational v = apply(x.hi);
  if (u > v) std::swap(u, v);
  return isolate_roots_in(q, u, v).at(0);
}

namespace {

using Cplx = std::complex<long double>;

std::vector<Cplx> numeric_roots(const IntPolynomial& p) {
  const int d = p.degree();
  std::vector<Cplx> c(static_cast<size_t>(d + 1));
  long double lc = p.leading().get_d();
  for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = static_cast<long double>(p.coeff(k).get_d()) / lc;
  auto eval = [&](Cplx x) {
    Cplx acc = 0;
    for (int k = d; k >= 0; --k) acc = acc * x + c[static_cast<size_t>(k)];
    return acc;
  };
  std::vector<Cplx> z(static_cast<size_t>(d));
  const Cplx seed(0.4L, 0.9L);
  for (int i = 0; i < d; ++i) z[static_cast<size_t>(i)] = std::pow(seed, i);
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (int i = 0; i < d; ++i) {
      Cplx den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      Cplx step = eval(z[static_cast<size_t>(i)]) / den;
      z[static_cast<size_t>(i)] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-30L) break;
  }
  return z;
}

std::vector<long> small_divisors(const Integer& n) {
  std::vector<long> out;
  if (!n.fits_slong_p()) return out;
  long v = std::labs(n.get_si());
  if (v > 100000000L) return out;
  for (long k = 1; k * k <= v; ++k)
    if (v % k == 0) {
      out.push_back(k);
      if (k * k != v) out.push_back(v / k);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

namespace {

AlgebraicNumber linear_root(const IntPolynomial& f) {
  Rational r(-f.coeff(0), f.coeff(1));
  r.canonicalize();
  return AlgebraicNumber::from_rational(r);
}

}  // namespace

AlgebraicNumber minimal_form(const AlgebraicNumber& alpha) {
  if (alpha.is_rational()) return alpha;
  const IntPolynomial& p = alpha.poly;
  const int d = p.degree();
  if (d == 1) return linear_root(p);
  if (d <= 1 || d > 16) return alpha;
  std::vector<long> divs = small_divisors(p.leading());
  if (divs.empty()) return alpha;
  std::vector<Cplx> z = numeric_roots(p);
  const long double target = static_cast<long double>(alpha.approx());
  size_t t = 0;
  for (size_t i = 1; i < z.size(); ++i)
    if (std::abs(z[i] - target) < std::abs(z[t] - target)) t = i;
  std::vector<size_t> others;
  for (size_t i = 0; i < z.size(); ++i)
    if (i != t) others.push_back(i);
  for (int extra = 0; extra < d - 1; ++extra) {
    // Subsets of `others` of size `extra`, in lexicographic order.
    std::vector<int> pick(static_cast<size_t>(d - 1), 0);
    std::fill(pick.end() - extra, pick.end(), 1);
    do {
      std::vector<Cplx> prod{Cplx(1)};
      auto mul = [&](Cplx r) {
        std::vector<Cplx> next(prod.size() + 1, Cplx(0));
        for (size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] += prod[k];
          next[k] -= prod[k] * r;
        }
        prod.swap(next);
      };
      mul(z[t]);
      for (size_t k = 0; k < others.size(); ++k)
        if (pick[k]) mul(z[others[k]]);
      bool real = true;
      for (const auto& c : prod)
        if (std::fabs(c.imag()) > 1e-9L * std::max<long double>(1, std::abs(c))) real = false;
      if (!real) continue;
      for (long l : divs) {
        std::vector<Integer> coeffs;
        bool ok = true;
        for (const auto& c : prod) {
          long double v = c.real() * l;
          long double r = std::round(v);
          if (std::fabs(v - r) > 1e-7L * std::max<long double>(1, std::fabs(v)) || std::fabs(r) > 9e15L) {
            ok = false;
            break;
          }
          coeffs.emplace_back(static_cast<double>(r));
        }
        if (!ok) continue;
        IntPolynomial f = IntPolynomial(std::move(coeffs)).primitive();
        try {
          (void)exact_quotient(p, f);
        } catch (const DomainError&) {
          continue;
        }
        if (sturm_count(f, alpha.lo, alpha.hi) != 1) continue;
        if (f.degree() == 1) return linear_root(f);
        return AlgebraicNumber{f, alpha.lo, alpha.hi};
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return alpha;
}

}  // namespace pqdist
