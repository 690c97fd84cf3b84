#include "pqdist/spherical.hpp"

#include <algorithm>

#include "pqdist/errors.hpp"
#include "pqdist/number_field.hpp"

namespace pqdist {

namespace {

// Arithmetic in Q(alpha) as Q[x]/(m) with m shrinking to a factor whenever a
// nonzero element turns out to be a zero divisor.
class FieldContext {
 public:
  explicit FieldContext(const AlgebraicNumber& alpha)
      : alpha_(alpha), m_(RatPolynomial::from_int(alpha.poly)) {}

  RatPolynomial reduce(const RatPolynomial& x) const { return rem(x, m_); }

  int sign(const RatPolynomial& x) const {
    RatPolynomial r = reduce(x);
    if (r.is_zero()) return 0;
    Integer den = 1;
    for (const auto& c : r.coefficients()) lcm_into(den, c.get_den());
    std::vector<Integer> num;
    for (const auto& c : r.coefficients()) num.push_back(Rational(c * den).get_num());
    return alg_sign(IntPolynomial(std::move(num)), alpha_);
  }

  RatPolynomial inverse(const RatPolynomial& x) {
    while (true) {
      try {
        return inverse_mod(reduce(x), m_);
      } catch (const DomainError&) {
        IntPolynomial g = gcd(reduce(x).to_int(), m_.to_int());
        if (g.degree() < 1) throw;
        m_ = RatPolynomial::from_int(exact_quotient(m_.to_int(), g));
      }
    }
  }

  AlgebraicNumber value(const RatPolynomial& x) const { return evaluate_at(reduce(x), m_, alpha_); }

 private:
  AlgebraicNumber alpha_;
  RatPolynomial m_;
};

RatPolynomial constant(const Rational& c) { return RatPolynomial({c}); }

// A particular solution of (-D) x = j over Q(b), or nullopt.
std::optional<std::vector<RatPolynomial>> solve_field(const RelationProvenance& pr, FieldContext& f) {
  const int n = pr.graph.order();
  const RatPolynomial t({Rational(0), Rational(1)});
  std::vector<std::vector<RatPolynomial>> m(n, std::vector<RatPolynomial>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = pr.graph.adjacent(i, j) ? constant(-pr.a) : Rational(-1) * t;
    m[i][n] = constant(1);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (f.sign(m[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    RatPolynomial inv = f.inverse(m[row][col]);
    for (int c = col; c <= n; ++c) m[row][c] = f.reduce(m[row][c] * inv);
    for (int r = 0; r < n; ++r) {
      if (r == row || f.sign(m[r][col]) == 0) continue;
      RatPolynomial factor = m[r][col];
      for (int c = col; c <= n; ++c) m[r][c] = f.reduce(m[r][c] - factor * m[row][c]);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (f.sign(m[r][n]) != 0) return std::nullopt;
  std::vector<RatPolynomial> x(n);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = m[r][n];
  return x;
}

Rational lower_positive(AlgebraicNumber a) {
  if (a.is_rational()) return a.lo / 2;
  while (a.lo <= 0) {
    bisect(a);
    if (a.is_rational()) return a.lo / 2;
  }
  return a.lo;
}

Rational upper_bound(const AlgebraicNumber& a) { return a.is_rational() ? a.lo * 3 / 2 : a.hi; }

int swap23(int t) { return t == 2 ? 3 : t == 3 ? 2 : t; }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

DissimilarityMatrix matrix_of(const ClassifiedSet& s) {
  return DissimilarityMatrix::from_relation(s.graph, Rational(s.key.branch), s.key.b());
}

}  // namespace

Signature gram_signature(const DissimilarityMatrix& d, const Rational& a) {
  const size_t n = static_cast<size_t>(d.order());
  if (d.is_rational()) {
    RationalMatrix g = -d.rational();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) g(i, j) += a;
    return signature(g);
  }
  const RelationProvenance& pr = *d.provenance();
  // -D + aJ = aI + (a - a1) A1 + (a - b) A2, scaled by the common denominator.
  Integer v = 1;
  lcm_into(v, a.get_den());
  lcm_into(v, pr.a.get_den());
  Rational vr(v);
  IntegerMatrix b0(n, n), b1(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        b0(i, j) = Rational(vr * a).get_num();
      } else if (pr.graph.adjacent(static_cast<int>(i), static_cast<int>(j))) {
        b0(i, j) = Rational(vr * (a - pr.a)).get_num();
      } else {
        b0(i, j) = Rational(vr * a).get_num();
        b1(i, j) = -v;
      }
    }
  return signature_at_algebraic(pencil_char_poly(b0, b1), pr.b);
}

bool is_spherical_in_embedding(const DissimilarityMatrix& d) { return classify_type(d) == 2; }

DissimilarityMatrix negated(const DissimilarityMatrix& d) {
  if (d.provenance()) {
    const auto& pr = *d.provenance();
    return DissimilarityMatrix::from_relation(pr.graph, -pr.a, mobius(pr.b, -1, 0, 0, 1));
  }
  return DissimilarityMatrix::from_rational(-d.rational());
}

SphericalPlacement spherical_radius(const DissimilarityMatrix& d) {
  EmbeddingDimension dim = embedding_dimension(d);
  if (type_from_signatures(dim, negated_signature(d)) != 2)
    throw DomainError("spherical_radius: dissimilarity matrix is not Type (2)");

  // a = -+1 / (j^T x) with (-D) x = j; the sign is fixed by certification.
  AlgebraicNumber inv;
  if (d.is_rational()) {
    auto x = solve(-d.rational(), std::vector<Rational>(static_cast<size_t>(d.order()), Rational(1)));
    if (!x) throw JNotInRange("spherical_radius: j not in the range of -D");
    Rational sum = 0;
    for (const auto& e : *x) sum += e;
    if (sum == 0) throw DomainError("spherical_radius: j^T x = 0");
    inv = AlgebraicNumber::from_rational(1 / sum);
  } else {
    FieldContext f(d.provenance()->b);
    auto x = solve_field(*d.provenance(), f);
    if (!x) throw JNotInRange("spherical_radius: j not in the range of -D");
    RatPolynomial sum;
    for (const auto& e : *x) sum = sum + e;
    if (f.sign(sum) == 0) throw DomainError("spherical_radius: j^T x = 0");
    inv = minimal_form(f.value(f.inverse(sum)));
  }

  for (int sg : {-1, 1}) {
    AlgebraicNumber a = inv.is_rational() ? AlgebraicNumber::from_rational(sg * inv.lo) : mobius(inv, sg, 0, 0, 1);
    if (alg_compare(a, Rational(0)) != Ordering::Greater) continue;
    SphericalPlacement pl;
    pl.target = dim;
    pl.a = a;
    pl.r = a.is_rational() ? AlgebraicNumber::from_rational(a.lo / 2) : mobius(a, 1, 0, 0, 2);
    pl.a_below = lower_positive(a);
    pl.a_above = upper_bound(a);
    pl.below = gram_signature(d, pl.a_below);
    pl.above = gram_signature(d, pl.a_above);
    // One eigenvalue of -D + sJ crosses zero, at s = a, from below to above.
    bool ok = pl.below == Signature{dim.p, dim.q + 1} && pl.above == Signature{dim.p + 1, dim.q};
    if (ok && a.is_rational()) ok = gram_signature(d, a.lo) == Signature{dim.p, dim.q};
    if (ok) return pl;
  }
  throw InconsistentTypeError("spherical_radius: no certified positive radius");
}

MinimalSphere minimal_spherical_dimension(const DissimilarityMatrix& d) {
  EmbeddingDimension dim = embedding_dimension(d);
  MinimalSphere out;
  out.type = type_from_signatures(dim, negated_signature(d));
  if (out.type == 2) {
    out.sphere = dim;
    out.a = spherical_radius(d).a;
    return out;
  }
  out.sphere = out.type == 1 ? EmbeddingDimension{dim.p + 1, dim.q + 1} : EmbeddingDimension{dim.p + 1, dim.q};
  for (Rational a : {Rational(1), Rational(2), Rational(1, 2), Rational(8), Rational(1, 8), Rational(64),
                     Rational(1, 64)}) {
    if (gram_signature(d, a) == Signature{out.sphere.p, out.sphere.q}) {
      out.a = AlgebraicNumber::from_rational(a);
      return out;
    }
  }
  throw InconsistentTypeError("minimal_spherical_dimension: no witness radius");
}

const CellResult& cell_result(int p, int q, const ClassifyOptions& opt, CellCache& cache) {
  auto it = cache.find({p, q});
  if (it != cache.end()) return it->second;
  return cache.emplace(std::make_pair(p, q), classify(p, q, opt)).first->second;
}

namespace {

SphericalContribution contribute(int p, int q, std::vector<int> types, const ClassifyOptions& opt,
                                 CellCache& cache) {
  SphericalContribution c;
  c.source_p = p;
  c.source_q = q;
  c.types = std::move(types);
  const CellResult& cell = cell_result(p, q, opt, cache);
  auto qualify = [&](int t, bool& neg) {
    neg = false;
    if (contains(c.types, t)) return true;
    if (p == q && contains(c.types, swap23(t))) {
      neg = true;
      return true;
    }
    return false;
  };
  if (!cell.infinite) {
    for (int n = cell.max_order; n >= p + q + 2 && c.order == 0; --n) {
      std::vector<ClassifiedSet> sets = n == cell.max_order ? cell.winners : proper_sets_at(cell, n);
      for (auto& s : sets) {
        SphericalSet e{s, p, q, classify_type(matrix_of(s)), false};
        if (qualify(e.type, e.negated)) {
          c.sets.push_back(std::move(e));
        } else {
          c.excluded.push_back(std::move(e));
        }
      }
      if (!c.sets.empty()) c.order = n;
    }
  }
  if (c.order == 0) {
    for (const auto& h : cell.open_ranges)
      for (const auto& tr : type_subranges(h.graph, h.branch, h.range, p, q)) {
        SphericalFamily fam{ScanHit{h.graph, h.branch, tr.range}, p, q, tr.type, false};
        if (qualify(tr.type, fam.negated)) c.families.push_back(std::move(fam));
      }
    if (!c.families.empty()) {
      c.order = p + q + 1;
      c.infinite = true;
    }
  }
  return c;
}

}  // namespace

SphericalResult classify_spherical(int p, int q, const ClassifyOptions& opt, CellCache* cache) {
  if (p < 1 || q < 0) throw DomainError("classify_spherical: need p >= 1");
  CellCache local;
  CellCache& cc = cache ? *cache : local;
  SphericalResult res;
  res.p = p;
  res.q = q;
  res.contributions.push_back(contribute(p, q, {2}, opt, cc));
  if (p - 1 + q >= 1) res.contributions.push_back(contribute(p - 1, q, {3, 4}, opt, cc));
  if (q >= 1 && p - 1 + q - 1 >= 1) res.contributions.push_back(contribute(p - 1, q - 1, {1}, opt, cc));
  for (const auto& c : res.contributions) res.max_order = std::max(res.max_order, c.order);
  for (const auto& c : res.contributions) {
    if (c.order != res.max_order || c.order == 0) continue;
    res.winners.insert(res.winners.end(), c.sets.begin(), c.sets.end());
    res.families.insert(res.families.end(), c.families.begin(), c.families.end());
    if (c.infinite) res.infinite = true;
  }
  return res;
}

}  // namespace pqdist
