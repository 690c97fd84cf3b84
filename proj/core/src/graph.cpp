#include "pqdist/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pqdist/errors.hpp"

namespace pqdist {

Graph::Graph(int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) throw DomainError("graph order must be in [0, 32]");
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (int v = 0; v < order; ++v) g.rows_[static_cast<size_t>(v)] = g.vertex_mask() & ~(1u << v);
  return g;
}

Graph Graph::cycle(int order) {
  Graph g(order);
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

Graph Graph::path(int order) {
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::from_adjacency(const IntegerMatrix& a) {
  if (!a.square()) throw DomainError("adjacency matrix must be square");
  Graph g(static_cast<int>(a.rows()));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Integer& x = a(i, j);
      if (x != 0 && x != 1) throw DomainError("adjacency entries must be 0 or 1");
      if (x != a(j, i)) throw DomainError("adjacency matrix must be symmetric");
      if (i == j && x != 0) throw DomainError("adjacency matrix must have zero diagonal");
      if (x == 1) g.rows_[i] |= 1u << j;
    }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
}

int Graph::degree(int v) const { return std::popcount(rows_[static_cast<size_t>(v)]); }

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += std::popcount(rows_[static_cast<size_t>(v)]);
  return s / 2;
}

bool Graph::is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  rows_[static_cast<size_t>(u)] |= 1u << v;
  rows_[static_cast<size_t>(v)] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<size_t>(u)] &= ~(1u << v);
  rows_[static_cast<size_t>(v)] &= ~(1u << u);
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v)
    g.rows_[static_cast<size_t>(v)] = ~rows_[static_cast<size_t>(v)] & vertex_mask() & ~(1u << v);
  return g;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  if (n_ < 2) throw DomainError("delete_vertex needs order >= 2");
  Graph g(n_ - 1);
  const std::uint32_t low = (1u << v) - 1u;
  for (int u = 0, k = 0; u < n_; ++u) {
    if (u == v) continue;
    std::uint32_t r = rows_[static_cast<size_t>(u)];
    g.rows_[static_cast<size_t>(k++)] = (r & low) | ((r >> 1) & ~low);
  }
  return g;
}

Graph Graph::add_vertex(std::uint32_t mask) const {
  if (n_ >= kMaxOrder) throw DomainError("graph order cap reached");
  Graph g = *this;
  g.n_ = n_ + 1;
  mask &= vertex_mask();
  g.rows_[static_cast<size_t>(n_)] = mask;
  for (int u = 0; u < n_; ++u)
    if ((mask >> u) & 1u) g.rows_[static_cast<size_t>(u)] |= 1u << n_;
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (size_t j = 0; j < vertices.size(); ++j)
      if (i != j && adjacent(vertices[i], vertices[j])) g.rows_[i] |= 1u << j;
  }
  return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation length mismatch");
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    std::uint32_t r = rows_[static_cast<size_t>(v)];
    std::uint32_t out = 0;
    while (r) {
      int u = std::countr_zero(r);
      r &= r - 1;
      out |= 1u << perm[static_cast<size_t>(u)];
    }
    g.rows_[static_cast<size_t>(perm[static_cast<size_t>(v)])] = out;
  }
  return g;
}

IntegerMatrix Graph::adjacency() const {
  IntegerMatrix a(static_cast<size_t>(n_), static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (adjacent(i, j)) a(static_cast<size_t>(i), static_cast<size_t>(j)) = 1;
  return a;
}

IntegerMatrix Graph::co_adjacency() const { return complement().adjacency(); }

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : k.words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

namespace {

inline void put_bits(std::array<std::uint64_t, 8>& w, int offset, std::uint64_t bits, int count) {
  if (count == 0) return;
  int word = offset >> 6;
  int shift = offset & 63;
  w[static_cast<size_t>(word)] |= bits << shift;
  if (shift + count > 64) w[static_cast<size_t>(word + 1)] |= bits >> (64 - shift);
}

inline std::uint64_t get_bits(const std::array<std::uint64_t, 8>& w, int offset, int count) {
  if (count == 0) return 0;
  int word = offset >> 6;
  int shift = offset & 63;
  std::uint64_t v = w[static_cast<size_t>(word)] >> shift;
  if (shift + count > 64) v |= w[static_cast<size_t>(word + 1)] << (64 - shift);
  return v & ((count == 64) ? ~0ull : ((1ull << count) - 1ull));
}

}  // namespace

CanonicalKey pack_graph(const Graph& g) {
  CanonicalKey k;
  const int n = g.order();
  // Column j holds the bits i < j, starting at offset j(j-1)/2.
  for (int j = 1; j < n; ++j) {
    std::uint64_t bits = g.row(j) & ((1u << j) - 1u);
    put_bits(k.words, j * (j - 1) / 2, bits, j);
  }
  k.words[7] |= static_cast<std::uint64_t>(n) << 58;
  return k;
}

Graph unpack_graph(const CanonicalKey& k) {
  const int n = k.order();
  Graph g(n);
  for (int j = 1; j < n; ++j) {
    std::uint64_t bits = get_bits(k.words, j * (j - 1) / 2, j);
    for (int i = 0; i < j; ++i)
      if ((bits >> i) & 1ull) g.add_edge(i, j);
  }
  return g;
}

namespace {

struct Partition {
  std::array<std::uint32_t, kMaxOrder> cells{};
  int count = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.key = pack_graph(g_);
      return out;
    }
    Partition p;
    p.cells[0] = g_.vertex_mask();
    p.count = 1;
    std::vector<std::uint32_t> queue{p.cells[0]};
    refine(p, queue);
    explore(p);
    out.lab = best_lab_;
    out.key = best_key_;
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  void refine(Partition& p, std::vector<std::uint32_t>& queue) {
    std::size_t head = 0;
    std::array<int, kMaxOrder> cnt{};
    while (head < queue.size()) {
      const std::uint32_t w = queue[head++];
      for (int ci = 0; ci < p.count; ++ci) {
        const std::uint32_t c = p.cells[static_cast<size_t>(ci)];
        if (std::popcount(c) == 1) continue;
        int lo = kMaxOrder, hi = -1;
        for (std::uint32_t r = c; r; r &= r - 1) {
          int v = std::countr_zero(r);
          int k = std::popcount(g_.row(v) & w);
          cnt[static_cast<size_t>(v)] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        std::array<std::uint32_t, kMaxOrder + 1> parts{};
        for (std::uint32_t r = c; r; r &= r - 1) {
          int v = std::countr_zero(r);
          parts[static_cast<size_t>(cnt[static_cast<size_t>(v)])] |= 1u << v;
        }
        std::array<std::uint32_t, kMaxOrder> sub{};
        int ns = 0;
        for (int k = lo; k <= hi; ++k)
          if (parts[static_cast<size_t>(k)]) sub[static_cast<size_t>(ns++)] = parts[static_cast<size_t>(k)];
        for (int t = p.count - 1; t > ci; --t) p.cells[static_cast<size_t>(t + ns - 1)] = p.cells[static_cast<size_t>(t)];
        for (int s = 0; s < ns; ++s) {
          p.cells[static_cast<size_t>(ci + s)] = sub[static_cast<size_t>(s)];
          queue.push_back(sub[static_cast<size_t>(s)]);
        }
        p.count += ns - 1;
        ci += ns - 1;
      }
    }
  }

  Partition individualize(const Partition& p, int v) {
    Partition q;
    const std::uint32_t bit = 1u << v;
    for (int ci = 0; ci < p.count; ++ci) {
      std::uint32_t c = p.cells[static_cast<size_t>(ci)];
      if (c & bit) {
        q.cells[static_cast<size_t>(q.count++)] = bit;
        q.cells[static_cast<size_t>(q.count++)] = c & ~bit;
      } else {
        q.cells[static_cast<size_t>(q.count++)] = c;
      }
    }
    std::vector<std::uint32_t> queue{bit};
    refine(q, queue);
    return q;
  }

  CanonicalKey leaf_key(const Partition& p, std::vector<int>& lab) {
    lab.resize(static_cast<size_t>(n_));
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) {
      int v = std::countr_zero(p.cells[static_cast<size_t>(i)]);
      lab[static_cast<size_t>(i)] = v;
      pos[static_cast<size_t>(v)] = i;
    }
    Graph h(n_);
    for (int i = 0; i < n_; ++i) {
      std::uint32_t r = g_.row(lab[static_cast<size_t>(i)]);
      for (; r; r &= r - 1) {
        int j = pos[static_cast<size_t>(std::countr_zero(r))];
        if (j > i) h.add_edge(i, j);
      }
    }
    return pack_graph(h);
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[static_cast<size_t>(from[static_cast<size_t>(i)])] = to[static_cast<size_t>(i)];
      if (from[static_cast<size_t>(i)] != to[static_cast<size_t>(i)]) identity = false;
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p) {
    std::vector<int> lab;
    CanonicalKey key = leaf_key(p, lab);
    if (!have_first_) {
      have_first_ = true;
      first_key_ = best_key_ = key;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      return -1;
    }
    if (key == first_key_) {
      record_automorphism(first_lab_, lab);
      return common_prefix(path_, first_path_);
    }
    if (key == best_key_) {
      record_automorphism(best_lab_, lab);
      return common_prefix(path_, best_path_);
    }
    if (best_key_ < key) {
      best_key_ = key;
      best_lab_ = std::move(lab);
      best_path_ = path_;
    }
    return -1;
  }

  int find(std::vector<int>& uf, int x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  }

  void orbits_fixing_path(std::vector<int>& uf) {
    uf.resize(static_cast<size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int v : path_)
        if (gamma[static_cast<size_t>(v)] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(uf, v), b = find(uf, gamma[static_cast<size_t>(v)]);
        if (a != b) uf[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }

  int explore(const Partition& p) {
    if (p.count == n_) return leaf(p);
    const int depth = static_cast<int>(path_.size());
    int target = -1;
    int best_size = kMaxOrder + 1;
    for (int ci = 0; ci < p.count; ++ci) {
      int s = std::popcount(p.cells[static_cast<size_t>(ci)]);
      if (s > 1 && s < best_size) {
        best_size = s;
        target = ci;
      }
    }
    const std::uint32_t cell = p.cells[static_cast<size_t>(target)];
    std::vector<int> explored;
    std::vector<int> uf;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    for (std::uint32_t r = cell; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (!explored.empty()) {
        if (autos_seen != autos_.size()) {
          orbits_fixing_path(uf);
          autos_seen = autos_.size();
        }
        bool seen = false;
        for (int u : explored)
          if (find(uf, u) == find(uf, v)) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      explored.push_back(v);
      Partition q = individualize(p, v);
      path_.push_back(v);
      int jump = explore(q);
      path_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  const Graph& g_;
  const int n_;
  bool have_first_ = false;
  CanonicalKey first_key_, best_key_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<int> first_path_, best_path_, path_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

CanonicalKey canonical_form(const Graph& g) { return Canonizer(g).run().key; }

Graph canonical_graph(const Graph& g) { return unpack_graph(canonical_form(g)); }

std::uint64_t invariant_hash(const Graph& g) {
  const int n = g.order();
  std::array<std::uint64_t, kMaxOrder> val{};
  for (int v = 0; v < n; ++v) {
    std::uint64_t s = 0;
    std::uint64_t sq = 0;
    for (std::uint32_t r = g.row(v); r; r &= r - 1) {
      int u = std::countr_zero(r);
      std::uint64_t d = static_cast<std::uint64_t>(g.degree(u));
      s += d;
      sq += d * d;
    }
    // Triangles through v.
    std::uint64_t tri = 0;
    for (std::uint32_t r = g.row(v); r; r &= r - 1) {
      int u = std::countr_zero(r);
      tri += static_cast<std::uint64_t>(std::popcount(g.row(u) & g.row(v)));
    }
    val[static_cast<size_t>(v)] = (static_cast<std::uint64_t>(g.degree(v)) << 56) ^ (s << 40) ^ (sq << 20) ^ tri;
  }
  std::sort(val.begin(), val.begin() + n);
  std::uint64_t h = static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull;
  for (int v = 0; v < n; ++v) {
    h ^= val[static_cast<size_t>(v)] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw Graph6Error("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw Graph6Error("graph6 character out of range");
  if (s[0] == 126) throw Graph6Error("graph6 orders above 62 are not supported");
  const int n = s[0] - 63;
  if (n > kMaxOrder) throw Graph6Error("graph order exceeds 32");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() != need + 1) throw Graph6Error("graph6 length does not match order");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int c = s[1 + k / 6] - 63;
      if ((c >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    int c = s.back() - 63;
    if (c & ((1 << (6 - static_cast<int>(bits % 6))) - 1)) throw Graph6Error("graph6 padding bits must be zero");
  }
  return g;
}

}  // namespace pqdist
