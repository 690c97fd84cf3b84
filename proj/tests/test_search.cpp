#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

#include <gtest/gtest.h>

#include "pqdist/errors.hpp"
#include "pqdist/search.hpp"

using namespace pqdist;
namespace fs = std::filesystem;

namespace {

AlgebraicNumber root_at(const IntPolynomial& p, std::size_t k) { return isolate_roots(p).at(k); }

const CellResult& cached(int p, int q) {
  static std::map<std::pair<int, int>, CellResult> cache;
  auto it = cache.find({p, q});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, q), classify(p, q)).first;
  return it->second;
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("pqdist_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST(Search, OneOneIsInfiniteWithEmptyHigherLevels) {
  const CellResult& c = cached(1, 1);
  EXPECT_TRUE(c.infinite);
  EXPECT_EQ(c.max_order, 3);
  EXPECT_TRUE(c.critical_points.empty());
  EXPECT_TRUE(proper_sets_at(c, 4).empty());
  EXPECT_TRUE(proper_sets_at(c, 5).empty());
  EXPECT_FALSE(c.families.empty());
}

TEST(Search, TwoZeroPentagon) {
  const CellResult& c = cached(2, 0);
  EXPECT_EQ(c.max_order, 5);
  ASSERT_EQ(c.winners.size(), 1u);
  EXPECT_EQ(canonical_form(c.winners[0].graph), canonical_form(Graph::cycle(5)));
}

TEST(Search, TwoZeroOrderThreeRanges) {
  // Three points in the plane with two distances: every non-trivial graph gives an open range.
  auto hits = scan_small_orders(2, 0, 3);
  EXPECT_FALSE(hits.empty());
  for (const auto& h : hits) EXPECT_FALSE(h.range.is_point) << graph6_encode(h.graph);
}

TEST(Search, TwoOneLambdas) {
  const CellResult& c = cached(2, 1);
  ASSERT_EQ(c.max_order, 5);
  ASSERT_EQ(c.winners.size(), 8u);
  std::vector<AlgebraicNumber> want = {
      AlgebraicNumber::from_rational(make_rational(1, 5)),
      root_at({-1, 1, 5}, 1),
      root_at({1, -5, 3, 5}, 1),
      root_at({-1, 5, 5}, 1),
      root_at({-1, 8, 5}, 1),
      root_at({-4, -8, 5, 5}, 1),
      root_at({-3, -5, 7, 5}, 1),
      root_at({3, 9, 5}, 1),
  };
  std::vector<bool> used(want.size(), false);
  for (const auto& w : c.winners) {
    EXPECT_EQ(w.key.branch, 1);
    bool found = false;
    for (std::size_t i = 0; i < want.size() && !found; ++i)
      if (!used[i] && alg_equal(w.key.lambda, want[i])) used[i] = found = true;
    EXPECT_TRUE(found) << graph6_encode(w.graph) << " " << w.key.lambda.to_string();
  }
}

TEST(Search, TwoTwoHeptagon) {
  const CellResult& c = cached(2, 2);
  ASSERT_EQ(c.max_order, 7);
  ASSERT_EQ(c.winners.size(), 1u);
  EXPECT_EQ(canonical_form(c.winners[0].graph), canonical_form(Graph::cycle(7)));
  EXPECT_TRUE(alg_equal(c.winners[0].key.lambda, root_at({-1, -2, 1, 1}, 1)));
}

TEST(Search, ThreeOneGoldenRatio) {
  const CellResult& c = cached(3, 1);
  ASSERT_EQ(c.max_order, 7);
  ASSERT_EQ(c.winners.size(), 3u);
  AlgebraicNumber phi = root_at({-1, 1, 1}, 1);
  ASSERT_EQ(alg_compare(phi, Rational(0)), Ordering::Greater);
  ASSERT_EQ(alg_compare(phi, Rational(1)), Ordering::Less);
  for (const auto& w : c.winners) EXPECT_TRUE(alg_equal(w.key.lambda, phi));
}

TEST(Search, WinnersHavePrincipalWitness) {
  for (auto [p, q] : {std::pair{2, 0}, {3, 0}, {2, 1}, {3, 1}, {2, 2}}) {
    const CellResult& c = cached(p, q);
    for (const auto& w : c.winners) {
      auto d = DissimilarityMatrix::from_relation(w.graph, Rational(w.key.branch), w.key.b());
      auto idx = principal_witness(d);
      EXPECT_EQ(static_cast<int>(idx.size()), p + q + 1);
      EXPECT_EQ(embedding_dimension(d.principal(idx)), (EmbeddingDimension{p, q}));
    }
  }
}

TEST(Search, VerificationRejectsWrongDimension) {
  LambdaKey key{root_at({-1, -2, 1, 1}, 1), 1};
  Verification v = verify_representable(Graph::cycle(7), key, 3, 1);
  EXPECT_FALSE(v.proper);
  v = verify_representable(Graph::cycle(7), key, 2, 2);
  EXPECT_TRUE(v.proper);
}

TEST(Search, TierGuard) {
  EXPECT_THROW(classify(5, 3), TierExceededError);
  EXPECT_THROW(classify(-1, 0), DomainError);
}

TEST(Search, BranchRestriction) {
  ClassifyOptions o;
  o.branches = {-1};
  CellResult c = classify(2, 1, o);
  for (const auto& w : c.winners) EXPECT_EQ(w.key.branch, -1);
  EXPECT_LT(c.max_order, 5);
}

TEST(Checkpoint, ResumeMatchesFreshRun) {
  fs::path d = scratch("resume");
  ClassifyOptions o;
  o.checkpoint_dir = d.string();
  CellResult first = classify(2, 1, o);
  o.resume = true;
  CellResult resumed = classify(2, 1, o);
  EXPECT_EQ(resumed.max_order, first.max_order);
  EXPECT_EQ(resumed.graphs_examined, first.graphs_examined);
  EXPECT_EQ(resumed.boundary.size(), first.boundary.size());
  ASSERT_EQ(resumed.winners.size(), first.winners.size());
  for (std::size_t i = 0; i < first.winners.size(); ++i) {
    EXPECT_EQ(resumed.winners[i].graph, first.winners[i].graph);
    EXPECT_TRUE(same_key(resumed.winners[i].key, first.winners[i].key));
  }
  fs::remove_all(d);
}

TEST(Checkpoint, SaveLoadRoundTrip) {
  fs::path d = scratch("roundtrip");
  SearchLevel l;
  l.n = 6;
  l.key = {root_at({-1, 1, 1}, 1), 1};
  l.L = {canonical_form(Graph::cycle(6)), canonical_form(Graph::path(6))};
  std::sort(l.L.begin(), l.L.end());
  l.Lprime = {canonical_form(Graph::cycle(6))};
  std::string bucket = checkpoint_bucket_dir(d.string(), 3, 1, 1, 0);
  checkpoint_save(bucket, 3, 1, 0, {l});
  auto back = checkpoint_load(bucket);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].n, 6);
  EXPECT_EQ(back[0].L, l.L);
  EXPECT_EQ(back[0].Lprime, l.Lprime);
  EXPECT_TRUE(same_key(back[0].key, l.key));
  fs::remove_all(d);
}

TEST(Checkpoint, CorruptRecordIsReported) {
  fs::path d = scratch("corrupt");
  SearchLevel l;
  l.n = 5;
  l.key = {AlgebraicNumber::from_rational(make_rational(1, 5)), 1};
  l.L = {canonical_form(Graph::cycle(5)), canonical_form(Graph::path(5))};
  l.Lprime = l.L;
  std::string bucket = checkpoint_bucket_dir(d.string(), 2, 1, 1, 0);
  checkpoint_save(bucket, 2, 1, 0, {l});
  {
    std::ofstream f(fs::path(bucket) / "L_5.g6", std::ios::app);
    f << "not-graph6\n";
  }
  try {
    checkpoint_load(bucket);
    FAIL() << "corrupt level accepted";
  } catch (const CheckpointError& e) {
    EXPECT_EQ(e.record(), 2);
  }
  {
    std::ofstream f(fs::path(bucket) / "manifest.json", std::ios::trunc);
    f << "{";
  }
  EXPECT_THROW(checkpoint_load(bucket), CheckpointError);
  EXPECT_THROW(checkpoint_load((d / "missing").string()), CheckpointError);
  fs::remove_all(d);
}
