#include "pqdist/spectral.hpp"

#include <algorithm>

#include "pqdist/errors.hpp"
#include "pqdist/number_field.hpp"
#include "pqdist/sturm.hpp"

namespace pqdist {

IntPolynomial char_poly_int(const IntegerMatrix& m) { return IntPolynomial(berkowitz(m)); }

CharPoly char_poly(const RationalMatrix& m) {
  if (!m.square()) throw DomainError("characteristic polynomial of non-square matrix");
  const size_t n = m.rows();
  Integer l = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) lcm_into(l, m(i, j).get_den());
  IntegerMatrix im(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational v = m(i, j) * l;
      im(i, j) = v.get_num();
    }
  std::vector<Integer> c = berkowitz(im);
  Integer pw = 1;
  for (auto& x : c) {
    x *= pw;
    pw *= l;
  }
  CharPoly out;
  out.scale = pw / l;
  out.scaled = IntPolynomial(std::move(c));
  return out;
}

Signature signature_from_char_poly(const IntPolynomial& p) {
  Signature s;
  s.positives = sign_variations(p.coefficients());
  s.negatives = sign_variations(p.reflect().coefficients());
  return s;
}

Signature signature_by_sturm(const IntPolynomial& p) {
  Signature s;
  for (const auto& f : squarefree_decompose(p)) {
    IntPolynomial g = f.factor.strip_zero_roots();
    if (g.degree() < 1) continue;
    Rational b = cauchy_bound(g);
    SturmSequence st(g);
    s.positives += f.multiplicity * st.count(Rational(0), b);
    s.negatives += f.multiplicity * st.count(-b, Rational(0));
  }
  return s;
}

Signature signature(const RationalMatrix& m) { return signature_from_char_poly(char_poly(m).scaled); }

Signature signature(const IntegerMatrix& m) { return signature_from_char_poly(char_poly_int(m)); }

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  if (b.size() != rows) throw DomainError("right-hand side length mismatch");
  RationalMatrix a(rows, cols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
    a(i, cols) = b[i];
  }
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = 0; j <= cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (size_t j = c; j <= cols; ++j) a(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (size_t j = c; j <= cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (a(i, cols) != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a(i, cols);
  return x;
}

int rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return static_cast<int>(r);
}

Integer determinant(const IntegerMatrix& m) {
  std::vector<Integer> c = berkowitz(m);
  return (m.rows() % 2 == 0) ? c[0] : Integer(-c[0]);
}

namespace {

std::vector<std::vector<Rational>> krylov(const RationalMatrix& m, size_t count) {
  std::vector<std::vector<Rational>> v;
  v.emplace_back(m.rows(), Rational(1));
  while (v.size() < count) v.push_back(m.apply(v.back()));
  return v;
}

/// Monic rational minimal polynomial of M relative to j.
RatPolynomial main_poly_monic(const RationalMatrix& m) {
  const size_t n = m.rows();
  auto v = krylov(m, n + 1);
  for (size_t k = 1; k <= n; ++k) {
    RationalMatrix km(n, k);
    for (size_t i = 0; i < n; ++i)
      for (size_t c = 0; c < k; ++c) km(i, c) = v[c][i];
    auto sol = solve(km, v[k]);
    if (!sol) continue;
    std::vector<Rational> q(k + 1);
    for (size_t c = 0; c < k; ++c) q[c] = -(*sol)[c];
    q[k] = 1;
    return RatPolynomial(std::move(q));
  }
  throw DomainError("Krylov sequence did not terminate");
}

struct Eigen {
  AlgebraicNumber value;
  int multiplicity;
};

std::vector<Eigen> distinct_eigenvalues(const IntPolynomial& cp) {
  std::vector<Eigen> out;
  for (const auto& f : squarefree_decompose(cp))
    for (auto& r : isolate_roots(f.factor)) out.push_back({r, f.multiplicity});
  std::sort(out.begin(), out.end(), [](const Eigen& a, const Eigen& b) {
    return alg_compare(a.value, b.value) == Ordering::Less;
  });
  return out;
}

}  // namespace

IntPolynomial main_polynomial(const RationalMatrix& m) {
  if (!m.square() || m.rows() == 0) throw DomainError("main_polynomial needs a square matrix");
  return main_poly_monic(m).to_int();
}

MainSpectrum main_angles(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw DomainError("main_angles needs a symmetric matrix");
  const size_t n = m.rows();
  RatPolynomial mp = main_poly_monic(m);
  const int r = mp.degree();
  IntPolynomial mint = mp.to_int();
  auto v = krylov(m, static_cast<size_t>(r));
  std::vector<Rational> k(static_cast<size_t>(r));
  for (int t = 0; t < r; ++t)
    for (const auto& x : v[static_cast<size_t>(t)]) k[static_cast<size_t>(t)] += x;
  // N(y) = sum_t k_t h_t(y), h_t(y) = sum_{s > t} m_s y^{s-t-1}
  std::vector<Rational> ncoef(static_cast<size_t>(r));
  for (int t = 0; t < r; ++t)
    for (int s = t + 1; s <= r; ++s) ncoef[static_cast<size_t>(s - t - 1)] += k[static_cast<size_t>(t)] * mp.coeff(s);
  RatPolynomial npoly(std::move(ncoef));
  RatPolynomial denom = Rational(static_cast<long>(n)) * mp.derivative();
  RatPolynomial beta = rem(npoly * inverse_mod(denom, mp), mp);
  if (trace_mod(beta, mp) != 1) throw NormalizationError("main angles do not sum to one");

  MainSpectrum out;
  for (auto& e : distinct_eigenvalues(char_poly(m).scaled)) {
    SpectrumEntry s;
    s.eigenvalue = e.value;
    s.multiplicity = e.multiplicity;
    s.is_main = alg_sign(mint, e.value) == 0;
    s.beta_squared = s.is_main ? evaluate_at(beta, mp, e.value) : AlgebraicNumber::from_rational(0);
    out.entries.push_back(std::move(s));
  }
  return out;
}

HarmonicSum harmonic_main_sum_sign(const RationalMatrix& m) {
  const size_t n = m.rows();
  auto x = solve(m, std::vector<Rational>(n, Rational(1)));
  if (!x) throw JNotInRange("0 is a main eigenvalue; j is not in the column space");
  HarmonicSum h;
  for (const auto& v : *x) h.value += v;
  h.value /= static_cast<long>(n);
  h.sign = sgn(h.value);
  return h;
}

IntPolynomial BivariateCharPoly::x_coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coefficients.size())) return {};
  return IntPolynomial(coefficients[static_cast<size_t>(i)]);
}

IntPolynomial BivariateCharPoly::at(const Rational& t) const {
  std::vector<Rational> c;
  for (size_t i = 0; i < coefficients.size(); ++i) c.push_back(IntPolynomial(coefficients[i]).eval(t));
  return IntPolynomial::from_rationals(c);
}

BivariateCharPoly pencil_char_poly(const IntegerMatrix& b0, const IntegerMatrix& b1,
                                   const Integer& scale) {
  const size_t n = b0.rows();
  if (!b0.square() || b1.rows() != n || b1.cols() != n) throw DomainError("pencil shape mismatch");
  // samples[t][i] = coefficient of x^i in char(B0 + t B1)
  std::vector<std::vector<Integer>> samples;
  for (size_t t = 0; t <= n; ++t) {
    IntegerMatrix m = b0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) += Integer(static_cast<long>(t)) * b1(i, j);
    samples.push_back(berkowitz(m));
  }
  BivariateCharPoly out;
  out.order = static_cast<int>(n);
  out.scale = scale;
  out.coefficients.resize(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    // Newton divided differences on nodes 0..n.
    std::vector<Rational> dd(n + 1);
    for (size_t t = 0; t <= n; ++t) dd[t] = samples[t][i];
    for (size_t lvl = 1; lvl <= n; ++lvl)
      for (size_t t = n; t >= lvl; --t) dd[t] = (dd[t] - dd[t - 1]) / static_cast<long>(lvl);
    std::vector<Rational> poly{dd[n]};
    for (size_t kk = n; kk-- > 0;) {
      // poly = poly * (t - kk) + dd[kk]
      std::vector<Rational> next(poly.size() + 1);
      for (size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= poly[d] * static_cast<long>(kk);
      }
      next[0] += dd[kk];
      poly.swap(next);
    }
    std::vector<Integer> ic;
    for (const auto& c : poly) {
      if (c.get_den() != 1) throw DomainError("pencil interpolation produced a non-integer");
      ic.push_back(c.get_num());
    }
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    out.coefficients[i] = std::move(ic);
  }
  return out;
}

BivariateCharPoly char_poly_bivariate(const IntegerMatrix& a1, const IntegerMatrix& a2, int a_sign) {
  const size_t n = a1.rows();
  if (a2.rows() != n || !a1.square() || !a2.square()) throw RelationCoverError("shape mismatch");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Integer want = (i == j) ? 0 : 1;
      if (a1(i, j) + a2(i, j) != want) throw RelationCoverError("A1 + A2 must equal J - I");
    }
  if (a_sign != 1 && a_sign != -1) throw DomainError("a_sign must be +1 or -1");
  IntegerMatrix b0 = Integer(-a_sign) * a1;
  IntegerMatrix b1 = -a2;
  return pencil_char_poly(b0, b1);
}

Signature signature_at_algebraic(const BivariateCharPoly& bi, const AlgebraicNumber& b) {
  std::vector<Integer> signs;
  for (int i = 0; i <= bi.order; ++i) signs.emplace_back(alg_sign(bi.x_coefficient(i), b));
  Signature s;
  s.positives = sign_variations(signs);
  for (size_t i = 1; i < signs.size(); i += 2) signs[i] = -signs[i];
  s.negatives = sign_variations(signs);
  return s;
}

}  // namespace pqdist
