#pragma once

#include <array>
#include <string>
#include <vector>

#include "pqdist/embedding.hpp"
#include "pqdist/graph.hpp"
#include "pqdist/rational.hpp"

namespace pqdist {

/// c0 + c1 sqrt(d1) + c2 sqrt(d2) + c3 sqrt(d1 d2) in Q[sqrt d1, sqrt d2].
struct QuadraticNumber {
  std::array<Rational, 4> c;

  static QuadraticNumber rational(const Rational& r) { return {{r, 0, 0, 0}}; }
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
};

/// Arithmetic with the radicands fixed; d1 = d2 = 1 is plain Q.
class QuadraticField {
 public:
  QuadraticField(Integer d1 = 1, Integer d2 = 1) : d1_(std::move(d1)), d2_(std::move(d2)) {}
  const Integer& d1() const { return d1_; }
  const Integer& d2() const { return d2_; }

  QuadraticNumber add(const QuadraticNumber& x, const QuadraticNumber& y) const;
  QuadraticNumber sub(const QuadraticNumber& x, const QuadraticNumber& y) const;
  QuadraticNumber mul(const QuadraticNumber& x, const QuadraticNumber& y) const;
  /// Inverse through the two conjugations; throws DomainError for zero norm.
  QuadraticNumber inv(const QuadraticNumber& x) const;
  QuadraticNumber sqrt1() const { return {{0, 1, 0, 0}}; }
  QuadraticNumber sqrt2() const { return {{0, 0, 1, 0}}; }
  std::string decimal(const QuadraticNumber& x, int digits) const;
  double approx(const QuadraticNumber& x) const;

 private:
  Integer d1_;
  Integer d2_;
};

/// Points of R^{p,q}: first p coordinates positive, last q negative.
struct PointSet {
  EmbeddingDimension signature;
  QuadraticField field;
  std::vector<std::vector<QuadraticNumber>> exact;  // empty for numeric sets
  std::vector<std::vector<long double>> numeric;    // filled by realize
  std::string provenance;

  std::size_t size() const { return exact.empty() ? numeric.size() : exact.size(); }
  bool is_exact() const { return !exact.empty(); }
};

QuadraticNumber indefinite_distance(const PointSet& x, std::size_t i, std::size_t j);

struct DistanceCheck {
  bool all_rational = false;
  std::vector<Rational> values;  // distinct off-diagonal values, increasing
};

DistanceCheck distance_values(const PointSet& x);
/// Exact distance matrix; throws DomainError when some distance is irrational.
DissimilarityMatrix distance_matrix(const PointSet& x);
/// 0/1 matrix of the pairs at distance a (orders beyond the Graph limit allowed).
IntegerMatrix distance_pattern(const PointSet& x, const Rational& a);

Graph twentytwo_graph();
/// Adjacency of the graph realized by construct_family_pq1(n).
IntegerMatrix family_pq1_pattern(int n);
/// Adjacency of the graph realized by construct_johnson_family(p).
IntegerMatrix johnson_family_pattern(int p);

PointSet construct_22point();
/// n >= 7; n(n+3)/2 points with distances {4, 2}.
PointSet construct_family_pq1(int n);
/// p >= 5; 1 + p + p(p-1)/2 points with distances {4, 2} in R^{p,1}.
PointSet construct_johnson_family(int p);

/// Numeric coordinates from D; the split into positive and negative axes uses
/// the exact embedding dimension. Throws ToleranceExceeded.
PointSet realize(const DissimilarityMatrix& d, double tolerance = 1e-12);
/// Largest entrywise deviation of the numeric point set from D.
double max_deviation(const PointSet& x, const DissimilarityMatrix& d);

std::string point_set_json(const PointSet& x);
std::string point_set_csv(const PointSet& x, int digits = 17);

}  // namespace pqdist
