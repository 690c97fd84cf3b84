#include <random>

#include <gtest/gtest.h>

#include "pqdist/embedding.hpp"
#include "pqdist/errors.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/spectral.hpp"

using namespace pqdist;

namespace {

RationalMatrix relation_matrix(const Graph& g, const Rational& a, const Rational& b) {
  const auto n = static_cast<std::size_t>(g.order());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? a : b;
  return m;
}

std::vector<Rational> uniform(std::size_t n) {
  return std::vector<Rational>(n, make_rational(1, static_cast<long>(n)));
}

Graph one_edge() {
  Graph g(3);
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST(Embedding, FMatrixRequiresNormalizedWeights) {
  RationalMatrix m = relation_matrix(Graph::path(3), 1, 2);
  EXPECT_THROW(f_matrix(m, {1, 1, 0}), NormalizationError);
  EXPECT_THROW(f_matrix(m, {1, 0}), DomainError);
}

TEST(Embedding, RejectsNonDissimilarities) {
  RationalMatrix m(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(DissimilarityMatrix::from_rational(m), DomainError);
  m(1, 0) = 1;
  m(0, 0) = 1;
  EXPECT_THROW(DissimilarityMatrix::from_rational(m), DomainError);
}

TEST(Embedding, SimplexIsEuclidean) {
  auto d = DissimilarityMatrix::from_rational(relation_matrix(Graph::complete(5), 1, 1));
  EXPECT_EQ(embedding_dimension(d), (EmbeddingDimension{4, 0}));
}

// The signature of F_M(l) does not depend on the choice of l with l^T j = 1.
TEST(Property, CenteringWeightInvariance) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> size(2, 7), entry(-5, 5), num(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(size(rng));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = make_rational(entry(rng), 1 + (rng() % 3));
    std::vector<Rational> ell(n);
    Rational s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      ell[i] = make_rational(num(rng), 1 + (rng() % 4));
      s += ell[i];
    }
    ell[n - 1] = 1 - s;
    Signature ref = signature(f_matrix(m, uniform(n)));
    ASSERT_EQ(signature(f_matrix(m, ell)), ref) << "case " << t;
    Signature sc = signature(scaled_centered(m));
    ASSERT_EQ(sc, ref) << "case " << t;
  }
}

// Signature of F_M from sign(M), mainness of 0 and the harmonic main sum,
// checked against direct computation on every graph of order at most 7.
TEST(Property, CenteredSignatureFormulaOnAllSmallGraphs) {
  const Rational bs[] = {make_rational(1, 3), make_rational(-1, 3), make_rational(1, 2)};
  int checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : generate_all(n))
      for (int branch : {1, -1})
        for (const Rational& b : bs) {
          RationalMatrix m = relation_matrix(g, branch, b);
          ASSERT_EQ(centered_signature(m), signature(f_matrix(m, uniform(m.rows()))))
              << graph6_encode(g) << " a=" << branch << " b=" << to_string(b);
          ++checked;
        }
  EXPECT_EQ(checked, (1 + 2 + 4 + 11 + 34 + 156 + 1044 - 1) * 6);
}

// The relation spectrum predicts the embedding dimension at rational lambda > -1/2.
TEST(Property, RelationSpectrumMatchesDirectDimension) {
  const Rational lambdas[] = {make_rational(1, 3), make_rational(2, 1), make_rational(-1, 3),
                              make_rational(5, 1), make_rational(1, 7)};
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : generate_all(n)) {
      if (g.is_complete() || g.is_edgeless()) continue;
      RelationSpectrum s = relation_spectrum(g);
      for (int branch : {1, -1})
        for (const Rational& lam : lambdas) {
          Rational b = branch * lam / (1 + lam);
          auto d = DissimilarityMatrix::from_rational(relation_matrix(g, branch, b));
          Signature want = relation_signature(s, branch, lam);
          ASSERT_EQ(embedding_dimension(d), (EmbeddingDimension{want.positives, want.negatives}))
              << graph6_encode(g) << " branch " << branch << " lambda " << to_string(lam);
        }
    }
}

TEST(Embedding, LambdaBranchMaps) {
  AlgebraicNumber lam = AlgebraicNumber::from_rational(make_rational(1, 3));
  EXPECT_EQ(b_of_lambda(lam, 1).rational_value(), make_rational(1, 4));
  EXPECT_EQ(b_of_lambda(lam, -1).rational_value(), make_rational(-1, 4));
  EXPECT_TRUE(alg_equal(lambda_of_b(b_of_lambda(lam, -1), -1), lam));
}

TEST(Types, OneEdgeGraphFlipsAtQuarter) {
  Graph g = one_edge();
  for (Rational b : {make_rational(1, 5), make_rational(1, 8)}) {
    auto d = DissimilarityMatrix::from_relation(g, 1, AlgebraicNumber::from_rational(b));
    EXPECT_EQ(classify_type(d), 3) << to_string(b);
  }
  for (Rational b : {make_rational(-1, 5), make_rational(-1, 8)}) {
    auto d = DissimilarityMatrix::from_relation(g, -1, AlgebraicNumber::from_rational(b));
    EXPECT_EQ(classify_type(d), 2) << to_string(b);
  }
}

TEST(Types, EuclideanMatricesAreTypeOneOrTwo) {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : generate_all(n))
      for (Rational b : {make_rational(1, 2), make_rational(3, 2), make_rational(4, 3)}) {
        auto d = DissimilarityMatrix::from_rational(relation_matrix(g, 1, b));
        if (embedding_dimension(d).q != 0) continue;
        int t = classify_type(d);
        EXPECT_TRUE(t == 1 || t == 2) << graph6_encode(g) << " " << to_string(b);
      }
}

TEST(Embedding, PrincipalWitnessHasFullDimension) {
  auto d = DissimilarityMatrix::from_rational(relation_matrix(Graph::cycle(7), 1, 2));
  auto idx = principal_witness(d);
  EmbeddingDimension full = embedding_dimension(d);
  EXPECT_EQ(static_cast<int>(idx.size()), full.p + full.q + 1);
  EXPECT_EQ(embedding_dimension(d.principal(idx)), full);
}

// The first six points span a degenerate subspace: their own dimension is (4,0).
TEST(Embedding, PrincipalWitnessThroughDegenerateSpan) {
  Graph g = graph6_decode("LsCO`KiJALhYRW");
  auto d = DissimilarityMatrix::from_rational(relation_matrix(g, 1, make_rational(1, 2)));
  ASSERT_EQ(embedding_dimension(d), (EmbeddingDimension{5, 1}));
  EXPECT_EQ(embedding_dimension(d.principal({0, 1, 2, 3, 4, 5})), (EmbeddingDimension{4, 0}));
  auto idx = principal_witness(d);
  EXPECT_EQ(idx.size(), 7u);
  EXPECT_EQ(embedding_dimension(d.principal(idx)), (EmbeddingDimension{5, 1}));
}

TEST(Embedding, PrincipalWitnessAlgebraic) {
  AlgebraicNumber lam = isolate_roots(IntPolynomial{-1, -2, 1, 1})[1];
  auto d = DissimilarityMatrix::from_relation(Graph::cycle(7), 1, b_of_lambda(lam, 1));
  auto idx = principal_witness(d);
  EXPECT_EQ(idx.size(), 5u);
  EXPECT_EQ(embedding_dimension(d.principal(idx)), (EmbeddingDimension{2, 2}));
}

TEST(Embedding, CommutingDimensionalityMatchesDirect) {
  Graph c5 = Graph::cycle(5);
  EmbeddingDimension e = commuting_dimensionality({c5.adjacency(), c5.co_adjacency()}, {1, 2});
  auto d = DissimilarityMatrix::from_rational(relation_matrix(c5, 1, 2));
  EXPECT_EQ(e, embedding_dimension(d));
  IntegerMatrix bad = c5.adjacency();
  EXPECT_THROW(commuting_dimensionality({bad, bad}, {1, 2}), RelationCoverError);
}

TEST(Embedding, RelationSpectrumOfPentagon) {
  RelationSpectrum s = relation_spectrum(Graph::cycle(5));
  ASSERT_EQ(s.roots.size(), 2u);
  EXPECT_EQ(s.roots[0].multiplicity, 2);
  EXPECT_NEAR(s.roots[0].value.approx(), -1.6180339887498949, 1e-12);
  EXPECT_NEAR(s.roots[1].value.approx(), 0.6180339887498949, 1e-12);
}
