#include <algorithm>
#include <chrono>

#include <gtest/gtest.h>

#include "pqdist/constructions.hpp"
#include "pqdist/errors.hpp"
#include "pqdist/spherical.hpp"

using namespace pqdist;

TEST(QuadraticField, InverseAndSquares) {
  QuadraticField f(2, 3);
  QuadraticNumber x{{make_rational(1, 2), 3, -1, make_rational(2, 7)}};
  EXPECT_EQ(f.mul(x, f.inv(x)), QuadraticNumber::rational(1));
  EXPECT_EQ(f.mul(f.sqrt1(), f.sqrt1()), QuadraticNumber::rational(2));
  EXPECT_EQ(f.mul(f.sqrt2(), f.sqrt2()), QuadraticNumber::rational(3));
  EXPECT_NEAR(f.approx(f.add(f.sqrt1(), f.sqrt2())), 1.4142135623730951 + 1.7320508075688772, 1e-12);
  EXPECT_THROW(f.inv(QuadraticNumber::rational(0)), DomainError);
}

TEST(Constructions, TwentyTwoPointSet) {
  auto t0 = std::chrono::steady_clock::now();
  PointSet x = construct_22point();
  ASSERT_EQ(x.size(), 22u);
  EXPECT_EQ(x.signature, (EmbeddingDimension{6, 1}));
  DistanceCheck dv = distance_values(x);
  ASSERT_TRUE(dv.all_rational);
  EXPECT_EQ(dv.values, (std::vector<Rational>{2, 4}));
  DissimilarityMatrix d = distance_matrix(x);
  EXPECT_EQ(embedding_dimension(d), (EmbeddingDimension{6, 1}));
  EXPECT_EQ(distance_pattern(x, 4), twentytwo_graph().adjacency());
  EXPECT_EQ(classify_type(d), 2);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 60.0);
}

TEST(Constructions, FamilyQOne) {
  for (int n = 7; n <= 10; ++n) {
    PointSet x = construct_family_pq1(n);
    ASSERT_EQ(static_cast<int>(x.size()), n * (n + 3) / 2) << n;
    DistanceCheck dv = distance_values(x);
    ASSERT_TRUE(dv.all_rational) << n;
    EXPECT_EQ(dv.values, (std::vector<Rational>{2, 4})) << n;
    EXPECT_EQ(embedding_dimension(distance_matrix(x)), (EmbeddingDimension{n, 1})) << n;
    EXPECT_EQ(distance_pattern(x, 4), family_pq1_pattern(n)) << n;
  }
  EXPECT_THROW(construct_family_pq1(6), DomainError);
}

TEST(Constructions, NineIsRational) {
  PointSet x = construct_family_pq1(9);
  for (const auto& pt : x.exact)
    for (const auto& c : pt) EXPECT_TRUE(c.is_rational());
}

TEST(Constructions, JohnsonFamilySizes) {
  for (int p = 5; p <= 9; ++p) {
    PointSet x = construct_johnson_family(p);
    EXPECT_EQ(static_cast<int>(x.size()), 1 + p + p * (p - 1) / 2) << p;
    DistanceCheck dv = distance_values(x);
    EXPECT_TRUE(dv.all_rational);
    EXPECT_EQ(dv.values, (std::vector<Rational>{2, 4}));
    EXPECT_EQ(embedding_dimension(distance_matrix(x)), (EmbeddingDimension{p, p == 5 ? 0 : 1})) << p;
    EXPECT_EQ(distance_pattern(x, 4), johnson_family_pattern(p));
  }
  EXPECT_EQ(construct_johnson_family(7).size(), 29u);
  EXPECT_THROW(construct_johnson_family(4), DomainError);
}

TEST(Realize, ReproducesDistances) {
  DissimilarityMatrix d = distance_matrix(construct_22point());
  PointSet r = realize(d, 1e-12);
  EXPECT_EQ(r.signature, (EmbeddingDimension{6, 1}));
  EXPECT_LT(max_deviation(r, d), 1e-15);
}

TEST(Realize, AlgebraicDistances) {
  AlgebraicNumber lam = isolate_roots(IntPolynomial{-1, -2, 1, 1})[1];
  auto d = DissimilarityMatrix::from_relation(Graph::cycle(7), 1, b_of_lambda(lam, 1));
  PointSet r = realize(d, 1e-12);
  EXPECT_EQ(r.signature, (EmbeddingDimension{2, 2}));
  EXPECT_LT(max_deviation(r, d), 1e-15);
}

TEST(Output, JsonAndCsv) {
  PointSet x = construct_family_pq1(7);
  std::string j = point_set_json(x);
  EXPECT_NE(j.find("\"schema\": 1"), std::string::npos);
  std::string csv = point_set_csv(x, 6);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), x.size() + 1);
}
