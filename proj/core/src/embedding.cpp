#include "pqdist/embedding.hpp"

#include <algorithm>
#include <functional>

#include "pqdist/errors.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/number_field.hpp"

namespace pqdist {

namespace {

IntegerMatrix centered_int(const IntegerMatrix& a) {
  const size_t n = a.rows();
  IntegerMatrix c(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c(i, j) = (i == j ? Integer(static_cast<long>(n) - 1) : Integer(-1));
  return c * a * c;
}

// Multiplies the algebraic b by a positive integer v.
AlgebraicNumber scale_algebraic(const AlgebraicNumber& b, const Integer& v) {
  if (v == 1) return b;
  if (!v.fits_slong_p()) throw DomainError("scale factor too large");
  return mobius(b, v.get_si(), 0, 0, 1);
}

// Integer pencil B0 + t B1 whose signature at t = b' equals that of scale * M(b).
struct Pencil {
  IntegerMatrix b0;
  IntegerMatrix b1;
  AlgebraicNumber t;
};

Pencil relation_pencil(const RelationProvenance& pr, bool centered, bool negate) {
  IntegerMatrix a1 = pr.graph.adjacency();
  IntegerMatrix a2 = pr.graph.co_adjacency();
  if (centered) {
    a1 = centered_int(a1);
    a2 = centered_int(a2);
  }
  // D = a A1 + b A2; after scaling by the denominator v of a: ai A1 + v b A2.
  Integer v = pr.a.get_den();
  Integer ai = pr.a.get_num();
  Integer s = negate ? Integer(-1) : Integer(1);
  Pencil out{Integer(s * ai) * a1, Integer(s) * a2, scale_algebraic(pr.b, v)};
  return out;
}

Rational rational_between(AlgebraicNumber x, std::optional<AlgebraicNumber> y) {
  if (!y) {
    return (x.is_rational() ? x.lo : x.hi) + 1;
  }
  while (true) {
    if (x.hi < y->lo) return (x.hi + y->lo) / 2;
    if (!x.is_rational()) bisect(x);
    if (!y->is_rational()) bisect(*y);
    if (x.is_rational() && y->is_rational() && x.hi >= y->lo)
      throw DomainError("rational_between: empty interval");
  }
}

bool alg_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_compare(a, b) == Ordering::Less;
}

}  // namespace

DissimilarityMatrix DissimilarityMatrix::from_rational(RationalMatrix m) {
  if (!m.square()) throw DomainError("dissimilarity matrix must be square");
  if (!m.is_symmetric()) throw DomainError("dissimilarity matrix must be symmetric");
  for (size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) != 0) throw DomainError("dissimilarity matrix must have zero diagonal");
  DissimilarityMatrix d;
  d.n_ = static_cast<int>(m.rows());
  d.rational_ = std::move(m);
  return d;
}

DissimilarityMatrix DissimilarityMatrix::from_relation(const Graph& g, const Rational& a,
                                                       const AlgebraicNumber& b) {
  DissimilarityMatrix d;
  d.n_ = g.order();
  d.prov_ = RelationProvenance{g, a, b};
  if (b.is_rational()) {
    const size_t n = static_cast<size_t>(g.order());
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) m(i, j) = g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? a : b.lo;
    d.rational_ = std::move(m);
  }
  return d;
}

DissimilarityMatrix DissimilarityMatrix::principal(const std::vector<int>& idx) const {
  if (prov_) return from_relation(prov_->graph.induced(idx), prov_->a, prov_->b);
  std::vector<size_t> u(idx.begin(), idx.end());
  return from_rational(rational_->principal(u));
}

const RationalMatrix& DissimilarityMatrix::rational() const {
  if (!rational_) throw DomainError("dissimilarity matrix has irrational entries");
  return *rational_;
}

RationalMatrix f_matrix(const RationalMatrix& m, const std::vector<Rational>& ell) {
  const size_t n = m.rows();
  if (ell.size() != n) throw DomainError("f_matrix: length mismatch");
  Rational s = 0;
  for (const auto& x : ell) s += x;
  if (s != 1) throw NormalizationError("f_matrix: l^T j must be 1");
  RationalMatrix left = RationalMatrix::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) left(i, j) -= ell[j];
  return -(left * m * left.transpose());
}

RationalMatrix scaled_centered(const RationalMatrix& m) {
  const size_t n = m.rows();
  RationalMatrix c(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c(i, j) = (i == j ? Rational(static_cast<long>(n) - 1) : Rational(-1));
  return -(c * m * c);
}

EmbeddingDimension embedding_dimension(const DissimilarityMatrix& d) {
  if (d.is_rational()) {
    Signature s = signature(scaled_centered(d.rational()));
    return {s.positives, s.negatives};
  }
  Pencil pc = relation_pencil(*d.provenance(), true, true);
  Signature s = signature_at_algebraic(pencil_char_poly(pc.b0, pc.b1), pc.t);
  return {s.positives, s.negatives};
}

std::vector<int> principal_witness(const DissimilarityMatrix& d) {
  const EmbeddingDimension full = embedding_dimension(d);
  const int target = full.p + full.q;
  const int n = d.order();
  // Points are affinely independent iff the rows of F based at point 0 are.
  if (d.is_rational()) {
    std::vector<Rational> e0(static_cast<size_t>(n));
    e0[0] = 1;
    RationalMatrix f = f_matrix(d.rational(), e0);
    std::vector<int> idx{0};
    for (int v = 1; v < n && static_cast<int>(idx.size()) <= target; ++v) {
      RationalMatrix rows(idx.size(), static_cast<size_t>(n));
      for (size_t i = 1; i < idx.size(); ++i)
        for (int j = 0; j < n; ++j) rows(i - 1, static_cast<size_t>(j)) = f(static_cast<size_t>(idx[i]), static_cast<size_t>(j));
      for (int j = 0; j < n; ++j) rows(idx.size() - 1, static_cast<size_t>(j)) = f(static_cast<size_t>(v), static_cast<size_t>(j));
      if (rank(rows) == static_cast<int>(idx.size())) idx.push_back(v);
    }
    if (static_cast<int>(idx.size()) == target + 1 && embedding_dimension(d.principal(idx)) == full) return idx;
    throw InconsistentTypeError("principal_witness: no witness");
  }
  // The span of independent points may be degenerate, with radical of dimension at most min(p, q).
  const int slack = std::min(full.p, full.q);
  std::vector<int> idx{0};
  std::function<bool(int)> search = [&](int next) {
    const int have = static_cast<int>(idx.size());
    if (have == target + 1) return embedding_dimension(d.principal(idx)) == full;
    for (int v = next; v <= n - (target + 1 - have); ++v) {
      idx.push_back(v);
      EmbeddingDimension e = embedding_dimension(d.principal(idx));
      if (e.p <= full.p && e.q <= full.q && e.p + e.q >= have - slack && search(v + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  if (search(1)) return idx;
  throw InconsistentTypeError("principal_witness: no witness");
}

Signature negated_signature(const DissimilarityMatrix& d) {
  if (d.is_rational()) return signature(-d.rational());
  Pencil pc = relation_pencil(*d.provenance(), false, true);
  return signature_at_algebraic(pencil_char_poly(pc.b0, pc.b1), pc.t);
}

int type_from_signatures(const EmbeddingDimension& dim, const Signature& neg) {
  if (neg == Signature{dim.p + 1, dim.q + 1}) return 1;
  if (neg == Signature{dim.p, dim.q + 1}) return 2;
  if (neg == Signature{dim.p + 1, dim.q}) return 3;
  if (neg == Signature{dim.p, dim.q}) return 4;
  throw InconsistentTypeError("sign(-D) does not match any type");
}

int classify_type(const DissimilarityMatrix& d) {
  return type_from_signatures(embedding_dimension(d), negated_signature(d));
}

Signature centered_signature(const RationalMatrix& m) {
  Signature s = signature(m);
  const int p = s.positives;
  const int q = s.negatives;
  HarmonicSum h;
  try {
    h = harmonic_main_sum_sign(m);
  } catch (const JNotInRange&) {
    return {q, p};
  }
  if (h.sign == 0) return {q - 1, p - 1};
  if (h.sign > 0) return {q, p - 1};
  return {q - 1, p};
}

EmbeddingDimension commuting_dimensionality(const std::vector<IntegerMatrix>& relations,
                                            const std::vector<Rational>& coefficients) {
  if (relations.empty() || relations.size() != coefficients.size())
    throw DomainError("commuting_dimensionality: size mismatch");
  const size_t n = relations[0].rows();
  IntegerMatrix cover(n, n);
  for (const auto& a : relations) {
    if (a.rows() != n || !a.square()) throw RelationCoverError("shape mismatch");
    cover = cover + a;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (cover(i, j) != (i == j ? 0 : 1)) throw RelationCoverError("relations must partition J - I");

  std::vector<RationalMatrix> c;
  for (const auto& a : relations) {
    IntegerMatrix t = centered_int(a);
    RationalMatrix r(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) r(i, j) = Rational(t(i, j));
    c.push_back(std::move(r));
  }
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (c[i] * c[j] != c[j] * c[i]) throw NonCommutingError("P A_i P do not commute");

  // A generic combination separates the common eigenspaces; each relation is
  // then a polynomial in it.
  for (long base = 3; base < 40; base += 2) {
    RationalMatrix gen(n, n);
    Rational w = 1;
    for (const auto& x : c) {
      gen = gen + w * x;
      w *= base;
    }
    CharPoly cp = char_poly(gen);
    IntPolynomial minpoly = squarefree_part(cp.scaled);
    const int deg = minpoly.degree();
    std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
    for (int k = 1; k < deg; ++k) powers.push_back(powers.back() * gen);
    std::vector<RatPolynomial> f;
    bool ok = true;
    for (const auto& x : c) {
      RationalMatrix sys(n * n, static_cast<size_t>(deg));
      std::vector<Rational> rhs(n * n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          for (int k = 0; k < deg; ++k) sys(i * n + j, static_cast<size_t>(k)) = powers[static_cast<size_t>(k)](i, j);
          rhs[i * n + j] = x(i, j);
        }
      auto sol = solve(sys, rhs);
      if (!sol) {
        ok = false;
        break;
      }
      f.emplace_back(*sol);
    }
    if (!ok) continue;
    // Value of the form on the eigenspace theta: -sum a_i f_i(theta).
    RatPolynomial g;
    for (size_t i = 0; i < f.size(); ++i) g = g - coefficients[i] * f[i];
    IntPolynomial gi = g.to_int();
    Integer lead_fix = 1;
    // to_int makes the leading coefficient positive; recover the true sign.
    if (!g.is_zero() && g.leading() < 0) lead_fix = -1;
    EmbeddingDimension out;
    for (const auto& sf : squarefree_decompose(cp.scaled)) {
      for (const auto& theta : isolate_roots(sf.factor)) {
        int sg = g.is_zero() ? 0 : sign(lead_fix) * alg_sign(gi, theta);
        if (sg > 0) out.p += sf.multiplicity;
        if (sg < 0) out.q += sf.multiplicity;
      }
    }
    return out;
  }
  throw NonCommutingError("no separating combination found");
}

RelationSpectrum relation_spectrum(const Graph& g) {
  const int n = g.order();
  RelationSpectrum out;
  out.order = n;
  if (n < 2) return out;
  IntPolynomial c = char_poly_int(centered_int(g.adjacency()));
  // Drop the eigenvalue 0 belonging to j.
  if (c.coeff(0) != 0) throw DomainError("relation_spectrum: j is not in the kernel");
  std::vector<Integer> shifted(c.coefficients().begin() + 1, c.coefficients().end());
  // Roots of c are n^2 mu.
  Integer n2 = Integer(n) * n;
  Integer pw = 1;
  for (auto& x : shifted) {
    x *= pw;
    pw *= n2;
  }
  IntPolynomial mu = IntPolynomial(std::move(shifted)).primitive();
  for (const auto& sf : squarefree_decompose(mu))
    for (auto& r : isolate_roots(sf.factor)) out.roots.push_back({std::move(r), sf.multiplicity});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return alg_less(x.value, y.value); });
  return out;
}

Signature relation_signature(const RelationSpectrum& s, int branch, const AlgebraicNumber& lambda) {
  int below = 0, above = 0;
  for (const auto& r : s.roots) {
    Ordering o = alg_compare(r.value, lambda);
    if (o == Ordering::Less) below += r.multiplicity;
    if (o == Ordering::Greater) above += r.multiplicity;
  }
  return branch > 0 ? Signature{below, above} : Signature{above, below};
}

Signature relation_signature(const RelationSpectrum& s, int branch, const Rational& lambda) {
  return relation_signature(s, branch, AlgebraicNumber::from_rational(lambda));
}

AlgebraicNumber b_of_lambda(const AlgebraicNumber& lambda, int branch) {
  return branch > 0 ? mobius(lambda, 1, 0, 1, 1) : mobius(lambda, -1, 0, 1, 1);
}

AlgebraicNumber lambda_of_b(const AlgebraicNumber& b, int branch) {
  return branch > 0 ? mobius(b, 1, 0, -1, 1) : mobius(b, -1, 0, 1, 1);
}

std::vector<ScanHit> scan_graph(const Graph& g, int p, int q) {
  std::vector<ScanHit> hits;
  if (g.order() < 2 || g.is_complete() || g.is_edgeless()) return hits;
  RelationSpectrum s = relation_spectrum(g);
  const AlgebraicNumber half = AlgebraicNumber::from_rational(Rational(-1, 2));
  const AlgebraicNumber zero = AlgebraicNumber::from_rational(Rational(0));
  std::vector<AlgebraicNumber> bps{half, zero};
  std::vector<const RelationSpectrum::Root*> inside;
  for (const auto& r : s.roots) {
    if (alg_compare(r.value, Rational(-1, 2)) != Ordering::Greater) continue;
    if (alg_compare(r.value, Rational(0)) == Ordering::Equal) continue;
    bps.push_back(r.value);
    inside.push_back(&r);
  }
  std::sort(bps.begin(), bps.end(), alg_less);
  for (int branch : {1, -1}) {
    for (size_t k = 0; k < bps.size(); ++k) {
      LambdaRange cell;
      cell.lo = bps[k];
      if (k + 1 < bps.size()) cell.hi = bps[k + 1];
      int below = 0, above = 0;
      for (const auto& r : s.roots) {
        if (alg_compare(r.value, cell.lo) != Ordering::Greater) below += r.multiplicity;
        else above += r.multiplicity;
      }
      Signature sg = branch > 0 ? Signature{below, above} : Signature{above, below};
      if (sg == Signature{p, q}) hits.push_back({g, branch, cell});
    }
    for (const auto* r : inside) {
      Signature sg = relation_signature(s, branch, r->value);
      if (sg == Signature{p, q}) {
        LambdaRange pt;
        pt.is_point = true;
        pt.lo = r->value;
        hits.push_back({g, branch, pt});
      }
    }
  }
  return hits;
}

std::vector<ScanHit> scan_small_orders(int p, int q, int n) {
  if (n < 2) throw DomainError("scan_small_orders: order too small");
  std::vector<ScanHit> out;
  generate_all(n, [&](const Graph& g) {
    auto h = scan_graph(g, p, q);
    out.insert(out.end(), h.begin(), h.end());
  });
  return out;
}

std::vector<TypedRange> type_subranges(const Graph& g, int branch, const LambdaRange& r, int p,
                                       int q) {
  std::vector<TypedRange> out;
  auto type_at = [&](const Rational& b) {
    DissimilarityMatrix d = DissimilarityMatrix::from_relation(g, branch, AlgebraicNumber::from_rational(b));
    return type_from_signatures({p, q}, negated_signature(d));
  };
  if (r.is_point) {
    DissimilarityMatrix d = DissimilarityMatrix::from_relation(g, branch, b_of_lambda(r.lo, branch));
    out.push_back({r, type_from_signatures({p, q}, negated_signature(d))});
    return out;
  }
  // Work in b, where sign(-D) can only change at roots of the lowest
  // nonvanishing coefficient of char(-D(t)).
  AlgebraicNumber blo = b_of_lambda(r.lo, branch);
  AlgebraicNumber bhi = r.hi ? b_of_lambda(*r.hi, branch)
                             : AlgebraicNumber::from_rational(Rational(branch > 0 ? 1 : -1));
  if (alg_less(bhi, blo)) std::swap(blo, bhi);
  BivariateCharPoly bi = char_poly_bivariate(g.adjacency(), g.co_adjacency(), branch);
  IntPolynomial low;
  for (int i = 0; i <= bi.order; ++i) {
    low = bi.x_coefficient(i);
    if (!low.is_zero()) break;
  }
  std::vector<AlgebraicNumber> cuts{blo};
  if (low.degree() >= 1) {
    for (auto& z : isolate_roots(low))
      if (alg_less(blo, z) && alg_less(z, bhi)) cuts.push_back(z);
  }
  cuts.push_back(bhi);
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational sample = rational_between(cuts[k], cuts[k + 1]);
    int t = type_at(sample);
    // b = 1 (branch +1) or b = -1 (branch -1) stands for lambda = infinity.
    bool hi_inf = !r.hi && branch > 0 && k + 2 == cuts.size();
    bool lo_inf = !r.hi && branch < 0 && k == 0;
    TypedRange tr;
    tr.type = t;
    if (hi_inf) {
      tr.range.lo = lambda_of_b(cuts[k], branch);
    } else if (lo_inf) {
      tr.range.lo = lambda_of_b(cuts[k + 1], branch);
    } else {
      AlgebraicNumber l0 = lambda_of_b(cuts[k], branch);
      AlgebraicNumber l1 = lambda_of_b(cuts[k + 1], branch);
      if (alg_less(l1, l0)) std::swap(l0, l1);
      tr.range.lo = l0;
      tr.range.hi = l1;
    }
    out.push_back(std::move(tr));
  }
  std::sort(out.begin(), out.end(),
            [](const TypedRange& a, const TypedRange& b) { return alg_less(a.range.lo, b.range.lo); });
  return out;
}

Integer bound_ambient(int p, int q, int s) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p + q + s), static_cast<unsigned long>(s));
  return r;
}

Integer bound_sphere(int p, int q, int s) {
  Integer a, b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(p + q + s - 1), static_cast<unsigned long>(s));
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p + q + s - 2), static_cast<unsigned long>(s - 1));
  return a + b;
}

Integer bound_sphere_q1(int p, int s) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p + s), static_cast<unsigned long>(s));
  return r;
}

std::vector<Rational> k_integrality(const std::vector<Rational>& distances) {
  const size_t s = distances.size();
  for (size_t i = 0; i < s; ++i) {
    if (distances[i] == 0) throw DomainError("k_integrality: zero distance");
    for (size_t j = i + 1; j < s; ++j)
      if (distances[i] == distances[j]) throw DomainError("k_integrality: distances not distinct");
  }
  std::vector<Rational> k(s, Rational(1));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j)
      if (j != i) k[i] *= distances[j] / (distances[j] - distances[i]);
  return k;
}

}  // namespace pqdist
