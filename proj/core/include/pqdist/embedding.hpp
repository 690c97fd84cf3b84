#pragma once

#include <optional>
#include <vector>

#include "pqdist/algebraic.hpp"
#include "pqdist/graph.hpp"
#include "pqdist/matrix.hpp"
#include "pqdist/spectral.hpp"

namespace pqdist {

/// D = a A1 + b A2 where A1 are the edges of graph and A2 the non-edges.
struct RelationProvenance {
  Graph graph;
  Rational a;
  AlgebraicNumber b;
};

class DissimilarityMatrix {
 public:
  /// Symmetric, zero diagonal.
  static DissimilarityMatrix from_rational(RationalMatrix m);
  static DissimilarityMatrix from_relation(const Graph& g, const Rational& a, const AlgebraicNumber& b);

  int order() const { return n_; }
  bool is_rational() const { return rational_.has_value(); }
  /// Throws DomainError for irrational entries.
  const RationalMatrix& rational() const;
  const std::optional<RelationProvenance>& provenance() const { return prov_; }
  DissimilarityMatrix principal(const std::vector<int>& idx) const;

 private:
  int n_ = 0;
  std::optional<RationalMatrix> rational_;
  std::optional<RelationProvenance> prov_;
};

struct EmbeddingDimension {
  int p = 0;
  int q = 0;
  friend bool operator==(const EmbeddingDimension&, const EmbeddingDimension&) = default;
};

/// -(I - j l^T) M (I - l j^T). Requires l^T j = 1.
RationalMatrix f_matrix(const RationalMatrix& m, const std::vector<Rational>& ell);
/// n^2 F_M(j/n) = -(nI - J) M (nI - J).
RationalMatrix scaled_centered(const RationalMatrix& m);

EmbeddingDimension embedding_dimension(const DissimilarityMatrix& d);
/// Indices of a principal submatrix of order p+q+1 with the same embedding
/// dimension (p, q).
std::vector<int> principal_witness(const DissimilarityMatrix& d);

/// sign(-D).
Signature negated_signature(const DissimilarityMatrix& d);

/// Type (1)..(4) from sign(-D) against the embedding dimension.
int type_from_signatures(const EmbeddingDimension& dim, const Signature& neg);
int classify_type(const DissimilarityMatrix& d);

/// Signature of F_M(l) from sign(M), mainness of 0 and the harmonic main sum.
Signature centered_signature(const RationalMatrix& m);

/// Dimension from common eigenspaces of mutually commuting P A_i P.
EmbeddingDimension commuting_dimensionality(const std::vector<IntegerMatrix>& relations,
                                            const std::vector<Rational>& coefficients);

/// Eigenvalues of P A1 P on the orthogonal complement of j.
struct RelationSpectrum {
  int order = 0;
  struct Root {
    AlgebraicNumber value;
    int multiplicity = 0;
  };
  std::vector<Root> roots;  // increasing, distinct
};

RelationSpectrum relation_spectrum(const Graph& g);

/// Signature of F for D = a A1 + b A2 with a = branch, b = b(lambda).
/// branch +1: (#mu < lambda, #mu > lambda); branch -1 swapped.
Signature relation_signature(const RelationSpectrum& s, int branch, const AlgebraicNumber& lambda);
Signature relation_signature(const RelationSpectrum& s, int branch, const Rational& lambda);

/// b = lambda/(1+lambda) on branch +1, -lambda/(1+lambda) on branch -1.
AlgebraicNumber b_of_lambda(const AlgebraicNumber& lambda, int branch);
/// Inverse of b_of_lambda.
AlgebraicNumber lambda_of_b(const AlgebraicNumber& b, int branch);

/// An open lambda interval (hi absent means +infinity) or a single point.
struct LambdaRange {
  bool is_point = false;
  AlgebraicNumber lo;
  std::optional<AlgebraicNumber> hi;
};

struct ScanHit {
  Graph graph;
  int branch = 1;
  LambdaRange range;
};

/// Every (graph of order n, branch, lambda cell or critical point) whose
/// embedding dimension is exactly (p, q), lambda in (-1/2, 0) or (0, inf).
std::vector<ScanHit> scan_small_orders(int p, int q, int n);
/// Same for a single graph.
std::vector<ScanHit> scan_graph(const Graph& g, int p, int q);

/// Splits an open range into subranges of constant type; boundary points
/// where sign(-D) changes are dropped.
struct TypedRange {
  LambdaRange range;
  int type = 0;
};
std::vector<TypedRange> type_subranges(const Graph& g, int branch, const LambdaRange& r, int p, int q);

Integer bound_ambient(int p, int q, int s);
Integer bound_sphere(int p, int q, int s);
Integer bound_sphere_q1(int p, int s);

/// K_i = prod_{j != i} alpha_j / (alpha_j - alpha_i).
std::vector<Rational> k_integrality(const std::vector<Rational>& distances);

}  // namespace pqdist
