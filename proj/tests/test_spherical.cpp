#include <gtest/gtest.h>

#include "pqdist/errors.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/spherical.hpp"

using namespace pqdist;

namespace {

DissimilarityMatrix relation(const Graph& g, long a, const Rational& b) {
  return DissimilarityMatrix::from_relation(g, Rational(a), AlgebraicNumber::from_rational(b));
}

IntPolynomial monic_sign(IntPolynomial p) { return p.leading() < 0 ? -p : p; }

Graph one_edge() {
  Graph g(3);
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST(Spherical, SimplexRadius) {
  for (int n = 2; n <= 8; ++n) {
    auto pl = spherical_radius(relation(Graph::complete(n), 1, 1));
    ASSERT_TRUE(pl.r.is_rational());
    EXPECT_EQ(pl.r.rational_value(), make_rational(n - 1, 2 * n)) << n;
    EXPECT_EQ(pl.target, (EmbeddingDimension{n - 1, 0}));
  }
}

TEST(Spherical, PentagonRadius) {
  CellCache cache;
  const CellResult& c = cell_result(2, 0, {}, cache);
  ASSERT_EQ(c.winners.size(), 1u);
  const auto& w = c.winners[0];
  auto pl = spherical_radius(DissimilarityMatrix::from_relation(w.graph, Rational(w.key.branch), w.key.b()));
  EXPECT_EQ(monic_sign(minimal_form(pl.a).poly), (IntPolynomial{4, -10, 5}));
  EXPECT_NEAR(pl.a.approx(), 0.55278640450004206, 1e-12);
}

TEST(Spherical, NegatedHeptagonRadius) {
  CellCache cache;
  const CellResult& c = cell_result(2, 2, {}, cache);
  ASSERT_EQ(c.winners.size(), 1u);
  const auto& w = c.winners[0];
  auto d = DissimilarityMatrix::from_relation(w.graph, Rational(w.key.branch), w.key.b());
  EXPECT_EQ(classify_type(d), 3);
  EXPECT_FALSE(is_spherical_in_embedding(d));
  EXPECT_THROW(spherical_radius(d), DomainError);
  auto nd = negated(d);
  EXPECT_EQ(classify_type(nd), 2);
  auto pl = spherical_radius(nd);
  EXPECT_EQ(monic_sign(minimal_form(pl.a).poly), (IntPolynomial{-8, 28, 98, 49}));
  EXPECT_NEAR(pl.a.approx(), 0.17253584903133614, 1e-12);
  EXPECT_EQ(pl.target, (EmbeddingDimension{2, 2}));
}

// A set is spherical in its embedding dimension exactly when it is of Type 2.
TEST(Property, TypeTwoIffSpherical) {
  const Rational bs[] = {make_rational(1, 5), make_rational(3, 10), make_rational(-1, 5),
                         make_rational(-3, 10), make_rational(2, 1), make_rational(-2, 1)};
  int spherical = 0, other = 0;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : generate_all(n)) {
      if (g.is_complete() || g.is_edgeless()) continue;
      for (long a : {1L, -1L})
        for (const Rational& b : bs) {
          auto d = relation(g, a, b);
          bool t2 = classify_type(d) == 2;
          ASSERT_EQ(is_spherical_in_embedding(d), t2) << graph6_encode(g) << " a=" << a << " b=" << to_string(b);
          (t2 ? spherical : other)++;
        }
    }
  EXPECT_GT(spherical, 0);
  EXPECT_GT(other, 0);
}

// The one-edge triangle changes type where b crosses 1/4 (a = 1) and -1/4 (a = -1).
TEST(Property, TypeFlipsAcrossCriticalValue) {
  Graph g = one_edge();
  auto below = relation(g, 1, make_rational(1, 5));
  auto above = relation(g, 1, make_rational(3, 10));
  EXPECT_EQ(classify_type(below), 3);
  EXPECT_FALSE(is_spherical_in_embedding(below));
  EXPECT_EQ(classify_type(above), 2);
  EXPECT_TRUE(is_spherical_in_embedding(above));
  auto nbelow = relation(g, -1, make_rational(-3, 10));
  auto nabove = relation(g, -1, make_rational(-1, 5));
  EXPECT_EQ(classify_type(nabove), 2);
  EXPECT_TRUE(is_spherical_in_embedding(nabove));
  EXPECT_NE(classify_type(nbelow), 2);
  EXPECT_FALSE(is_spherical_in_embedding(nbelow));
}

TEST(Spherical, RadiusCertificateBrackets) {
  auto d = relation(one_edge(), 1, make_rational(3, 10));
  auto pl = spherical_radius(d);
  EmbeddingDimension dim = embedding_dimension(d);
  EXPECT_EQ(pl.below, (Signature{dim.p, dim.q + 1}));
  EXPECT_EQ(pl.above, (Signature{dim.p + 1, dim.q}));
  EXPECT_EQ(alg_compare(pl.a, pl.a_below), Ordering::Greater);
  EXPECT_EQ(alg_compare(pl.a, pl.a_above), Ordering::Less);
  ASSERT_TRUE(pl.a.is_rational());
  EXPECT_EQ(gram_signature(d, pl.a.rational_value()), (Signature{dim.p, dim.q}));
}

TEST(Spherical, MinimalSphereByType) {
  auto t3 = relation(one_edge(), 1, make_rational(1, 5));
  MinimalSphere m = minimal_spherical_dimension(t3);
  EmbeddingDimension dim = embedding_dimension(t3);
  EXPECT_EQ(m.type, 3);
  EXPECT_EQ(m.sphere, (EmbeddingDimension{dim.p + 1, dim.q}));
  auto t2 = relation(Graph::complete(4), 1, 1);
  EXPECT_EQ(minimal_spherical_dimension(t2).sphere, (EmbeddingDimension{3, 0}));
}

TEST(Spherical, SmallCells) {
  CellCache cache;
  SphericalResult r21 = classify_spherical(2, 1, {}, &cache);
  EXPECT_TRUE(r21.infinite);
  EXPECT_EQ(r21.max_order, 4);
  EXPECT_FALSE(r21.families.empty());
  SphericalResult r22 = classify_spherical(2, 2, {}, &cache);
  EXPECT_FALSE(r22.infinite);
  EXPECT_EQ(r22.max_order, 7);
  ASSERT_EQ(r22.winners.size(), 1u);
  EXPECT_TRUE(r22.winners[0].negated);
  SphericalResult r31 = classify_spherical(3, 1, {}, &cache);
  EXPECT_EQ(r31.max_order, 7);
  EXPECT_EQ(r31.winners.size(), 3u);
  EXPECT_THROW(classify_spherical(0, 1), DomainError);
}
