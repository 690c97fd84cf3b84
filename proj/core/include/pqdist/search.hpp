#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqdist/algebraic.hpp"
#include "pqdist/embedding.hpp"
#include "pqdist/graph.hpp"

namespace pqdist {

/// lambda is an eigenvalue of P A1 P; branch is the sign of a.
struct LambdaKey {
  AlgebraicNumber lambda;
  int branch = 1;

  AlgebraicNumber b() const { return b_of_lambda(lambda, branch); }
};

bool same_key(const LambdaKey& x, const LambdaKey& y);

struct LambdaCandidate {
  LambdaKey key;
  bool proper = false;
};

/// Lambdas at which a graph of order p+q+3 has dimension at most (p, q). Throws DegenerateRelationError
/// for complete or edgeless graphs.
std::vector<LambdaCandidate> candidate_lambdas(const Graph& g, int p, int q, int branch);
/// Same from a precomputed spectrum; sets *boundary when lambda = -1/2 passes.
std::vector<LambdaCandidate> candidate_lambdas(const RelationSpectrum& s, int p, int q, int branch,
                                                bool* boundary = nullptr);

/// L[n, lambda] and L'[n, lambda] as sorted canonical keys.
struct SearchLevel {
  int n = 0;
  LambdaKey key;
  std::vector<CanonicalKey> L;
  std::vector<CanonicalKey> Lprime;
};

struct BaseLevel {
  std::vector<SearchLevel> buckets;  // sorted by branch (+1 first) then lambda
  std::vector<std::pair<Graph, int>> boundary;  // (graph, branch) with only lambda = -1/2
  std::uint64_t graphs_examined = 0;
};

BaseLevel build_base_level(int p, int q, const std::vector<int>& branches, int workers = 1);

struct ExtendStats {
  std::uint64_t extensions_tried = 0;
};

SearchLevel extend_level(const SearchLevel& level, int workers = 1, ExtendStats* stats = nullptr);

struct Verification {
  bool representable = false;
  bool proper = false;
  EmbeddingDimension dim;
};

Verification verify_representable(const Graph& g, const LambdaKey& key, int p, int q);

/// A verified proper set: graph with D = a A1 + b A2, a = branch.
struct ClassifiedSet {
  Graph graph;
  LambdaKey key;
  EmbeddingDimension dim;
};

struct LevelCount {
  int n = 0;
  std::size_t L = 0;
  std::size_t Lprime = 0;
};

struct BucketTrace {
  LambdaKey key;
  std::vector<LevelCount> levels;
};

struct ClassifyOptions {
  int workers = 1;
  int max_order = kMaxOrder;
  bool allow_long = false;
  std::string checkpoint_dir;  // empty: no checkpoints
  bool resume = false;
  std::vector<int> branches;   // empty: both (only +1 when p = q)
  std::function<void(const std::string&)> progress;
};

struct CellResult {
  int p = 0;
  int q = 0;
  int max_order = 0;
  bool infinite = false;
  std::vector<ClassifiedSet> winners;       // finite maximum, sorted by canonical key
  std::vector<ScanHit> families;            // open lambda ranges when infinite
  std::vector<ScanHit> critical_points;     // order p+q+2
  std::vector<ScanHit> open_ranges;         // order p+q+1
  std::vector<std::vector<SearchLevel>> levels;  // per bucket, orders p+q+3 upward
  std::vector<BucketTrace> traces;
  std::vector<std::pair<Graph, int>> boundary;
  std::vector<ClassifiedSet> rejected;      // top-level members failing the final check
  std::uint64_t graphs_examined = 0;
  std::uint64_t extensions_tried = 0;
};

/// Throws TierExceededError when p+q+3 > 10 and allow_long is false.
CellResult classify(int p, int q, const ClassifyOptions& opt = {});

/// Verified proper sets of order n in the cell, descending through search
/// levels (n >= p+q+3) or scan points (n = p+q+2).
std::vector<ClassifiedSet> proper_sets_at(const CellResult& cell, int n);

void checkpoint_save(const std::string& dir, int p, int q, int bucket_index, const std::vector<SearchLevel>& levels);
/// All levels stored in a bucket directory.
std::vector<SearchLevel> checkpoint_load(const std::string& bucket_dir);
std::string checkpoint_bucket_dir(const std::string& root, int p, int q, int branch, int bucket_index);

}  // namespace pqdist
