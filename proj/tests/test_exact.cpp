#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "pqdist/algebraic.hpp"
#include "pqdist/embedding.hpp"
#include "pqdist/errors.hpp"
#include "pqdist/graph.hpp"
#include "pqdist/number_field.hpp"
#include "pqdist/polynomial.hpp"
#include "pqdist/spectral.hpp"
#include "pqdist/sturm.hpp"

using namespace pqdist;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(3, -6)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(Polynomial, GcdAndSquarefree) {
  IntPolynomial f{-1, 0, 1};  // x^2 - 1
  IntPolynomial g{1, 2, 1};   // (x + 1)^2
  EXPECT_EQ(gcd(f, g), (IntPolynomial{1, 1}));
  EXPECT_EQ(squarefree_part(g), (IntPolynomial{1, 1}));
  EXPECT_EQ(exact_quotient(f, IntPolynomial{1, 1}), (IntPolynomial{-1, 1}));
  EXPECT_EQ(sign_variations({Integer(1), Integer(-2), Integer(0), Integer(3)}), 2);
}

TEST(Sturm, CountsRootsOfHeptagonCubic) {
  IntPolynomial c{-1, -2, 1, 1};
  EXPECT_EQ(sturm_count(c, -2, 2), 3);
  EXPECT_EQ(sturm_count(c, 0, 2), 1);
  EXPECT_THROW(sturm_count(IntPolynomial{-1, 1}, 1, 2), EndpointIsRoot);
}

TEST(Algebraic, IsolationMatchesFloatRoots) {
  auto roots = isolate_roots(IntPolynomial{-1, -2, 1, 1});
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0].approx(), -1.8019377358048383, 1e-12);
  EXPECT_NEAR(roots[1].approx(), -0.4450418679126288, 1e-12);
  EXPECT_NEAR(roots[2].approx(), 1.2469796037174670, 1e-12);
}

TEST(Algebraic, CompareAndEquality) {
  AlgebraicNumber phi = isolate_roots(IntPolynomial{-1, 1, 1})[1];  // (-1 + sqrt 5)/2
  AlgebraicNumber same = isolate_roots(IntPolynomial{1, 0, -3, 0, 1})[2];  // x^4 - 3x^2 + 1 shares the root
  EXPECT_TRUE(alg_equal(phi, same));
  EXPECT_EQ(alg_compare(phi, make_rational(5, 8)), Ordering::Less);
  EXPECT_EQ(alg_compare(phi, make_rational(3, 5)), Ordering::Greater);
  EXPECT_EQ(alg_sign(IntPolynomial{-1, 1, 1}, phi), 0);
}

TEST(Algebraic, MobiusAndMinimalForm) {
  AlgebraicNumber phi = isolate_roots(IntPolynomial{-1, 1, 1})[1];
  AlgebraicNumber b = mobius(phi, 1, 0, 1, 1);  // phi / (1 + phi) = 1 / phi^2
  EXPECT_NEAR(b.approx(), 0.3819660112501051, 1e-12);
  AlgebraicNumber lifted = phi;
  lifted.poly = IntPolynomial{-1, 1, 1} * IntPolynomial{-7, 0, 1};
  lifted = refine(lifted, make_rational(1, 1000));
  AlgebraicNumber m = minimal_form(lifted);
  EXPECT_EQ(m.poly, (IntPolynomial{-1, 1, 1}));
  EXPECT_TRUE(alg_equal(m, phi));
}

TEST(NumberField, InverseAndEvaluation) {
  RatPolynomial m = RatPolynomial::from_int(IntPolynomial{-2, 0, 1});
  RatPolynomial x({0, 1});
  RatPolynomial inv = inverse_mod(x + RatPolynomial({1}), m);  // 1/(1 + sqrt 2) = sqrt 2 - 1
  EXPECT_EQ(inv, RatPolynomial({-1, 1}));
  AlgebraicNumber s2 = isolate_roots(IntPolynomial{-2, 0, 1})[1];
  EXPECT_NEAR(evaluate_at(inv, m, s2).approx(), 0.41421356237309503, 1e-12);
  EXPECT_THROW(inverse_mod(RatPolynomial({-2, 0, 1}), m), DomainError);
}

TEST(Spectral, MainPolynomialOfPath) {
  Graph p3 = Graph::path(3);
  RationalMatrix a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = p3.adjacent(i, j) ? 1 : 0;
  IntPolynomial m = main_polynomial(a);
  if (m.leading() < 0) m = -m;
  EXPECT_EQ(m, (IntPolynomial{-2, 0, 1}));
}

TEST(Spectral, BerkowitzMatchesDefinition) {
  IntegerMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = -3;
  EXPECT_EQ(char_poly_int(m), (IntPolynomial{-7, 2, 1}));
}

// Signature of random symmetric integer matrices against a double-precision
// eigenvalue oracle.
TEST(Property, SignatureAgreesWithFloatOracle) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> size(1, 8), entry(-4, 4), sparse(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    IntegerMatrix m(n, n);
    Eigen::MatrixXd f(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int v = sparse(rng) == 0 ? 0 : entry(rng);
        m(i, j) = m(j, i) = v;
        f(i, j) = f(j, i) = v;
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f);
    Signature oracle;
    for (int k = 0; k < n; ++k) {
      double e = es.eigenvalues()(k);
      if (e > 1e-9) ++oracle.positives;
      if (e < -1e-9) ++oracle.negatives;
    }
    Signature exact = signature(m);
    ASSERT_EQ(exact, oracle) << "trial " << trial;
    ASSERT_EQ(signature_by_sturm(char_poly_int(m)), exact) << "trial " << trial;
  }
}

TEST(Spectral, SignatureAtAlgebraicMatchesNumeric) {
  // -(A1 + b A2) for the 7-cycle with b = lambda / (1 + lambda).
  Graph c7 = Graph::cycle(7);
  AlgebraicNumber lam = isolate_roots(IntPolynomial{-1, -2, 1, 1})[1];
  AlgebraicNumber b = mobius(lam, 1, 0, 1, 1);
  Signature s = signature_at_algebraic(char_poly_bivariate(c7.adjacency(), c7.co_adjacency(), 1), b);
  Eigen::MatrixXd f(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) f(i, j) = i == j ? 0.0 : -(c7.adjacent(i, j) ? 1.0 : b.approx());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f);
  Signature oracle;
  for (int k = 0; k < 7; ++k) {
    if (es.eigenvalues()(k) > 1e-9) ++oracle.positives;
    if (es.eigenvalues()(k) < -1e-9) ++oracle.negatives;
  }
  EXPECT_EQ(s, oracle);
}

TEST(Embedding, KIntegralityOfTwoDistances) {
  auto k = k_integrality({1, make_rational(1, 2)});
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], -1);
  EXPECT_EQ(k[1], 2);
}
