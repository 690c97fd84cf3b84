#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqdist/matrix.hpp"

namespace pqdist {

constexpr int kMaxOrder = 32;

/// Simple undirected graph on at most 32 vertices, one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph complete(int order);
  static Graph cycle(int order);
  static Graph path(int order);
  /// Adjacency given as a 0/1 matrix.
  static Graph from_adjacency(const IntegerMatrix& a);

  int order() const { return n_; }
  std::uint32_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::uint32_t vertex_mask() const { return n_ == 32 ? 0xffffffffu : ((1u << n_) - 1u); }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const;
  int edge_count() const;
  bool is_complete() const;
  bool is_edgeless() const { return edge_count() == 0; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph complement() const;
  Graph delete_vertex(int v) const;
  /// New vertex with index order() adjacent to the vertices in mask.
  Graph add_vertex(std::uint32_t mask) const;
  Graph induced(const std::vector<int>& vertices) const;
  /// Relabels vertex v as perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  IntegerMatrix adjacency() const;
  /// Complement adjacency J - I - A.
  IntegerMatrix co_adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::array<std::uint32_t, kMaxOrder> rows_{};
};

/// Upper-triangle bits of the canonically labelled graph plus the order.
/// Equal keys iff isomorphic graphs.
struct CanonicalKey {
  std::array<std::uint64_t, 8> words{};

  int order() const { return static_cast<int>(words[7] >> 58); }
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

/// Packs a (labelled) graph into key layout without canonicalizing.
CanonicalKey pack_graph(const Graph& g);
/// Inverse of pack_graph; canonical keys decode to the canonical representative.
Graph unpack_graph(const CanonicalKey& k);

struct CanonicalLabeling {
  /// lab[i] is the vertex of the input that receives canonical label i.
  std::vector<int> lab;
  CanonicalKey key;
  /// Automorphisms found during the search (images of 0..n-1).
  std::vector<std::vector<int>> automorphisms;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalKey canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Cheap isomorphism invariant: sorted degrees refined by neighbour degree sums.
std::uint64_t invariant_hash(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

}  // namespace pqdist
