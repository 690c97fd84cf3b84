#include "pqdist/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "json_util.hpp"
#include "pqdist/errors.hpp"

namespace mp = boost::multiprecision;
using Big = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;

namespace Eigen {
template <>
struct NumTraits<Big> : GenericNumTraits<Big> {
  using Real = Big;
  using NonInteger = Big;
  using Literal = Big;
  using Nested = Big;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 30,
    MulCost = 60
  };
  static Real epsilon() { return std::numeric_limits<Big>::epsilon(); }
  static Real dummy_precision() { return Real(1e-70); }
  static Real highest() { return (std::numeric_limits<Big>::max)(); }
  static Real lowest() { return std::numeric_limits<Big>::lowest(); }
  static Real infinity() { return std::numeric_limits<Big>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Big>::quiet_NaN(); }
  static int digits10() { return std::numeric_limits<Big>::digits10; }
};
}  // namespace Eigen

namespace pqdist {

namespace {
using BigMatrix = Eigen::Matrix<Big, Eigen::Dynamic, Eigen::Dynamic>;

Big to_big(const Rational& r) { return Big(r.get_num().get_str()) / Big(r.get_den().get_str()); }

Big to_big(const QuadraticField& f, const QuadraticNumber& x) {
  Big s1 = mp::sqrt(Big(f.d1().get_str()));
  Big s2 = mp::sqrt(Big(f.d2().get_str()));
  return to_big(x.c[0]) + to_big(x.c[1]) * s1 + to_big(x.c[2]) * s2 + to_big(x.c[3]) * s1 * s2;
}

QuadraticNumber conj1(const QuadraticNumber& x) { return {{x.c[0], -x.c[1], x.c[2], -x.c[3]}}; }
QuadraticNumber conj2(const QuadraticNumber& x) { return {{x.c[0], x.c[1], -x.c[2], -x.c[3]}}; }

QuadraticNumber q(const Rational& r) { return QuadraticNumber::rational(r); }

std::vector<QuadraticNumber> zeros(std::size_t n) { return std::vector<QuadraticNumber>(n, q(0)); }

// Integer square root when d is a perfect square, else -1.
long exact_sqrt(long d) {
  if (d < 0) return -1;
  long r = std::lround(std::sqrt(static_cast<double>(d)));
  for (long s = std::max(0L, r - 2); s <= r + 2; ++s)
    if (s * s == d) return s;
  return -1;
}

std::string hex_float(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%La", v);
  return buf;
}

}  // namespace

QuadraticNumber QuadraticField::add(const QuadraticNumber& x, const QuadraticNumber& y) const {
  QuadraticNumber r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
  return r;
}

QuadraticNumber QuadraticField::sub(const QuadraticNumber& x, const QuadraticNumber& y) const {
  QuadraticNumber r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] - y.c[i];
  return r;
}

QuadraticNumber QuadraticField::mul(const QuadraticNumber& x, const QuadraticNumber& y) const {
  const Rational d1(d1_), d2(d2_);
  QuadraticNumber r;
  r.c[0] = x.c[0] * y.c[0] + d1 * x.c[1] * y.c[1] + d2 * x.c[2] * y.c[2] + d1 * d2 * x.c[3] * y.c[3];
  r.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0] + d2 * (x.c[2] * y.c[3] + x.c[3] * y.c[2]);
  r.c[2] = x.c[0] * y.c[2] + x.c[2] * y.c[0] + d1 * (x.c[1] * y.c[3] + x.c[3] * y.c[1]);
  r.c[3] = x.c[0] * y.c[3] + x.c[3] * y.c[0] + x.c[1] * y.c[2] + x.c[2] * y.c[1];
  return r;
}

QuadraticNumber QuadraticField::inv(const QuadraticNumber& x) const {
  QuadraticNumber a = mul(x, conj1(x));
  QuadraticNumber n = mul(a, conj2(a));
  if (!n.is_rational() || n.c[0] == 0) throw DomainError("QuadraticField::inv: zero norm");
  QuadraticNumber r = mul(conj1(x), conj2(a));
  for (auto& c : r.c) c /= n.c[0];
  return r;
}

std::string QuadraticField::decimal(const QuadraticNumber& x, int digits) const {
  return to_big(*this, x).str(digits, std::ios_base::fixed);
}

double QuadraticField::approx(const QuadraticNumber& x) const { return static_cast<double>(to_big(*this, x)); }

QuadraticNumber indefinite_distance(const PointSet& x, std::size_t i, std::size_t j) {
  const auto& f = x.field;
  QuadraticNumber s = q(0);
  const auto& u = x.exact.at(i);
  const auto& v = x.exact.at(j);
  for (std::size_t k = 0; k < u.size(); ++k) {
    QuadraticNumber d = f.sub(u[k], v[k]);
    QuadraticNumber sq = f.mul(d, d);
    s = static_cast<int>(k) < x.signature.p ? f.add(s, sq) : f.sub(s, sq);
  }
  return s;
}

DistanceCheck distance_values(const PointSet& x) {
  DistanceCheck out;
  out.all_rational = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      QuadraticNumber d = indefinite_distance(x, i, j);
      if (!d.is_rational()) {
        out.all_rational = false;
        continue;
      }
      if (std::find(out.values.begin(), out.values.end(), d.c[0]) == out.values.end())
        out.values.push_back(d.c[0]);
    }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

DissimilarityMatrix distance_matrix(const PointSet& x) {
  const std::size_t n = x.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QuadraticNumber d = indefinite_distance(x, i, j);
      if (!d.is_rational()) throw DomainError("distance_matrix: irrational distance");
      m(i, j) = m(j, i) = d.c[0];
    }
  return DissimilarityMatrix::from_rational(std::move(m));
}

IntegerMatrix distance_pattern(const PointSet& x, const Rational& a) {
  const std::size_t n = x.size();
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (indefinite_distance(x, i, j) == q(a)) m(i, j) = m(j, i) = 1;
  return m;
}

IntegerMatrix johnson_family_pattern(int p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
  const std::size_t n = 1 + static_cast<std::size_t>(p) + pairs.size();
  IntegerMatrix m(n, n);
  auto edge = [&](std::size_t u, std::size_t v) { m(u, v) = m(v, u) = 1; };
  for (int i = 0; i < p; ++i) edge(0, 1 + static_cast<std::size_t>(i));
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const std::size_t vs = 1 + static_cast<std::size_t>(p) + s;
    edge(1 + static_cast<std::size_t>(pairs[s].first), vs);
    edge(1 + static_cast<std::size_t>(pairs[s].second), vs);
    for (std::size_t t = s + 1; t < pairs.size(); ++t) {
      auto [a, b] = pairs[s];
      auto [c, d] = pairs[t];
      if (a != c && a != d && b != c && b != d) edge(vs, 1 + static_cast<std::size_t>(p) + t);
    }
  }
  return m;
}

Graph twentytwo_graph() { return Graph::from_adjacency(johnson_family_pattern(6)); }

IntegerMatrix family_pq1_pattern(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t total = 2 * un + pairs.size();
  IntegerMatrix m(total, total);
  auto edge = [&](std::size_t u, std::size_t v) { m(u, v) = m(v, u) = 1; };
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      if (i != j) edge(i, un + j);
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const std::size_t ws = 2 * un + s;
    auto [a, b] = pairs[s];
    for (std::size_t k : {static_cast<std::size_t>(a), static_cast<std::size_t>(b)}) {
      edge(k, ws);
      edge(un + k, ws);
    }
    for (std::size_t t = s + 1; t < pairs.size(); ++t) {
      auto [c, d] = pairs[t];
      if (a != c && a != d && b != c && b != d) edge(ws, 2 * un + t);
    }
  }
  return m;
}

PointSet construct_johnson_family(int p) {
  if (p < 5) throw DomainError("construct_johnson_family: p >= 5");
  // v0 = c sum e_i + d e_{p+1} with d = 2 - 3c and (p - 9) c^2 + 8c - 4 = 0,
  // i.e. c = 2 / (2 + sqrt(p - 5)).
  PointSet x;
  x.signature = {p, 1};
  x.provenance = "johnson-family p=" + std::to_string(p);
  const long r = exact_sqrt(p - 5);
  QuadraticNumber s;
  if (r >= 0) {
    s = q(Rational(r));
  } else {
    x.field = QuadraticField(Integer(p - 5), 1);
    s = x.field.sqrt1();
  }
  const auto& f = x.field;
  QuadraticNumber c = f.mul(q(2), f.inv(f.add(q(2), s)));
  QuadraticNumber d = f.sub(q(2), f.mul(q(3), c));
  const std::size_t dim = static_cast<std::size_t>(p) + 1;
  auto v0 = zeros(dim);
  for (int i = 0; i < p; ++i) v0[static_cast<std::size_t>(i)] = c;
  v0[dim - 1] = d;
  x.exact.push_back(v0);
  for (int i = 0; i < p; ++i) {
    auto v = zeros(dim);
    v[static_cast<std::size_t>(i)] = q(-1);
    v[dim - 1] = q(1);
    x.exact.push_back(v);
  }
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      auto v = zeros(dim);
      v[static_cast<std::size_t>(i)] = q(1);
      v[static_cast<std::size_t>(j)] = q(1);
      x.exact.push_back(v);
    }
  return x;
}

PointSet construct_22point() {
  PointSet x = construct_johnson_family(6);
  x.provenance = "twentytwo";
  return x;
}

PointSet construct_family_pq1(int n) {
  if (n < 7) throw DomainError("construct_family_pq1: n >= 7");
  PointSet x;
  x.signature = {n + 1, 1};
  x.provenance = "family-pq1 n=" + std::to_string(n);
  const Rational rn(n);
  QuadraticNumber c1, c2, c3, c4;
  if (n == 9) {
    c1 = q(make_rational(3, 4));
    c2 = q(make_rational(3, 4));
    c3 = q(make_rational(-2, 3));
    c4 = q(make_rational(2, 3));
  } else {
    x.field = QuadraticField(Integer(n * (25 * n - 144)), Integer(3 * n * (n - 6)));
    const auto& f = x.field;
    c1 = q(make_rational(3, 4));
    c2 = {{0, make_rational(1, 4 * n), 0, 0}};
    // (3(2n - 9) + 4 sqrt(d2) c2) / (4(n - 9))
    QuadraticNumber num = f.add(q(Rational(3 * (2 * n - 9))), f.mul(f.mul(q(4), f.sqrt2()), c2));
    c3 = f.mul(num, q(make_rational(1, 4 * (n - 9))));
    // ((c1 c3 + 2) n - 9) / (n c2)
    QuadraticNumber top = f.sub(f.mul(f.add(f.mul(c1, c3), q(2)), q(rn)), q(9));
    c4 = f.mul(top, f.inv(f.mul(q(rn), c2)));
  }
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t dim = un + 2;
  auto base = zeros(dim);
  for (std::size_t j = 0; j < un; ++j) base[j] = q(make_rational(3, n));
  for (int k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < un; ++i) {
      auto v = base;
      v[i] = q(make_rational(3, n) - 1);
      v[un] = k == 0 ? c1 : c3;
      v[un + 1] = k == 0 ? c2 : c4;
      x.exact.push_back(v);
    }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) {
      auto v = zeros(dim);
      v[i] = q(1);
      v[j] = q(1);
      x.exact.push_back(v);
    }
  return x;
}

double max_deviation(const PointSet& x, const DissimilarityMatrix& d) {
  const std::size_t n = x.size();
  if (n != static_cast<std::size_t>(d.order())) throw DomainError("max_deviation: size mismatch");
  BigMatrix dm(n, n);
  if (d.is_rational()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dm(i, j) = to_big(d.rational()(i, j));
  } else {
    const auto& pr = *d.provenance();
    AlgebraicNumber b = refine(pr.b, Rational(1) / Rational(Integer(1) << 300));
    Big av = to_big(pr.a), bv = to_big((b.lo + b.hi) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dm(i, j) = i == j ? Big(0) : pr.graph.adjacent(static_cast<int>(i), static_cast<int>(j)) ? av : bv;
  }
  Big worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Big s = 0;
      for (std::size_t k = 0; k < x.numeric[i].size(); ++k) {
        Big t = Big(x.numeric[i][k]) - Big(x.numeric[j][k]);
        s += static_cast<int>(k) < x.signature.p ? t * t : -t * t;
      }
      worst = std::max(worst, Big(mp::abs(s - dm(i, j))));
    }
  return static_cast<double>(worst);
}

PointSet realize(const DissimilarityMatrix& d, double tolerance) {
  const std::size_t n = static_cast<std::size_t>(d.order());
  EmbeddingDimension dim = embedding_dimension(d);
  BigMatrix dm(n, n);
  if (d.is_rational()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dm(i, j) = to_big(d.rational()(i, j));
  } else {
    const auto& pr = *d.provenance();
    AlgebraicNumber b = refine(pr.b, Rational(1) / Rational(Integer(1) << 300));
    Big av = to_big(pr.a), bv = to_big((b.lo + b.hi) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dm(i, j) = i == j ? Big(0) : pr.graph.adjacent(static_cast<int>(i), static_cast<int>(j)) ? av : bv;
  }
  BigMatrix c = BigMatrix::Identity(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) -= Big(1) / Big(n);
  BigMatrix gram = -(c * dm * c) / Big(2);
  Eigen::SelfAdjointEigenSolver<BigMatrix> es(gram);
  const auto& ev = es.eigenvalues();
  const auto& u = es.eigenvectors();
  PointSet x;
  x.signature = dim;
  x.provenance = "realized";
  std::vector<Eigen::Index> cols;
  for (int k = 0; k < dim.p; ++k) cols.push_back(static_cast<Eigen::Index>(n) - 1 - k);
  for (int k = 0; k < dim.q; ++k) cols.push_back(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long double> pt;
    for (auto col : cols) {
      Big lam = mp::abs(ev(col));
      pt.push_back(static_cast<long double>(mp::sqrt(lam) * u(static_cast<Eigen::Index>(i), col)));
    }
    x.numeric.push_back(std::move(pt));
  }
  double dev = max_deviation(x, d);
  if (!(dev <= tolerance)) throw ToleranceExceeded("realize: deviation above tolerance", dev);
  return x;
}

std::string point_set_json(const PointSet& x) {
  Json j;
  j["schema"] = 1;
  j["provenance"] = x.provenance;
  j["signature"] = Json::array({x.signature.p, x.signature.q});
  j["size"] = x.size();
  Json pts = Json::array();
  if (x.is_exact()) {
    j["radicands"] = Json::array({to_string(x.field.d1()), to_string(x.field.d2()),
                                  to_string(Integer(x.field.d1() * x.field.d2()))});
    for (const auto& p : x.exact) {
      Json row = Json::array();
      for (const auto& c : p) {
        if (c.is_rational()) {
          row.push_back(to_string(c.c[0]));
        } else {
          Json r;
          r["coefficients"] = Json::array({to_string(c.c[0]), to_string(c.c[1]), to_string(c.c[2]), to_string(c.c[3])});
          r["radicands"] = Json::array({"1", to_string(x.field.d1()), to_string(x.field.d2()),
                                        to_string(Integer(x.field.d1() * x.field.d2()))});
          row.push_back(r);
        }
      }
      pts.push_back(row);
    }
    DistanceCheck dc = distance_values(x);
    Json dv = Json::array();
    for (const auto& v : dc.values) dv.push_back(to_string(v));
    j["distances"] = dv;
    j["distances_rational"] = dc.all_rational;
  } else {
    for (const auto& p : x.numeric) {
      Json row = Json::array();
      for (long double c : p) row.push_back(hex_float(c));
      pts.push_back(row);
    }
  }
  j["points"] = pts;
  return j.dump(2) + "\n";
}

std::string point_set_csv(const PointSet& x, int digits) {
  std::ostringstream out;
  const std::size_t dim = x.is_exact() ? (x.exact.empty() ? 0 : x.exact[0].size())
                                       : (x.numeric.empty() ? 0 : x.numeric[0].size());
  for (std::size_t k = 0; k < dim; ++k) out << (k ? "," : "") << (static_cast<int>(k) < x.signature.p ? "x" : "y") << k;
  out << "\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (k) out << ",";
      if (x.is_exact()) {
        out << x.field.decimal(x.exact[i][k], digits);
      } else {
        out << Big(x.numeric[i][k]).str(digits, std::ios_base::fixed);
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pqdist
