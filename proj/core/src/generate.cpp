#include "pqdist/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "pqdist/errors.hpp"

namespace pqdist {

namespace {

// Order at which the search tree is split between parts.
int split_order(int n) { return std::max(1, std::min(n - 1, 6)); }

struct Augmenter {
  int target;
  const GraphVisitor& visit;
  int parts;
  int part;
  std::uint64_t counter = 0;

  void children(const Graph& parent, std::vector<Graph>& out) {
    const int k = parent.order();
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Graph h = parent.add_vertex(mask);
      CanonicalLabeling cl = canonical_labeling(h);
      int m = cl.lab[static_cast<size_t>(k)];
      if (m != k) {
        if (h.degree(m) != h.degree(k)) continue;
        if (canonical_form(h.delete_vertex(m)) != canonical_form(parent)) continue;
      }
      if (!seen.insert(cl.key).second) continue;
      out.push_back(unpack_graph(cl.key));
    }
  }

  void descend(const Graph& g) {
    if (g.order() == split_order(target) && parts > 1) {
      std::uint64_t idx = counter++;
      if (static_cast<int>(idx % static_cast<std::uint64_t>(parts)) != part) return;
    }
    if (g.order() == target) {
      visit(g);
      return;
    }
    std::vector<Graph> kids;
    children(g, kids);
    for (const auto& c : kids) descend(c);
  }
};

}  // namespace

void generate_all(int n, const GraphVisitor& visit, int parts, int part) {
  if (n < 1 || n > kMaxOrder) throw DomainError("generate_all: order out of range");
  if (parts < 1 || part < 0 || part >= parts) throw DomainError("generate_all: bad partition");
  Augmenter a{n, visit, parts, part};
  a.descend(Graph(1));
}

std::vector<Graph> generate_all(int n) {
  std::vector<Graph> out;
  generate_all(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> generate_by_dedup(int n) {
  if (n < 1 || n > kMaxOrder) throw DomainError("generate_by_dedup: order out of range");
  std::vector<CanonicalKey> level{canonical_form(Graph(1))};
  for (int k = 1; k < n; ++k) {
    std::unordered_set<CanonicalKey, CanonicalKeyHash> next;
    for (const auto& key : level) {
      Graph g = unpack_graph(key);
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
        next.insert(canonical_form(g.add_vertex(mask)));
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& key : level) out.push_back(unpack_graph(key));
  return out;
}

std::vector<Graph> generate_brute_force(int n) {
  if (n < 1 || n > 8) throw DomainError("generate_brute_force: order out of range");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Graph g(n);
    for (size_t e = 0; e < pairs.size(); ++e)
      if ((bits >> e) & 1u) g.add_edge(pairs[e].first, pairs[e].second);
    seen.insert(canonical_form(g));
  }
  std::vector<CanonicalKey> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  std::vector<Graph> out;
  for (const auto& k : keys) out.push_back(unpack_graph(k));
  return out;
}

std::vector<Graph> extensions(const Graph& g) {
  if (g.order() >= kMaxOrder) throw DomainError("extensions: order cap reached");
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << g.order());
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) out.push_back(g.add_vertex(mask));
  return out;
}

std::uint64_t count_graphs(int n) {
  std::uint64_t c = 0;
  generate_all(n, [&](const Graph&) { ++c; });
  return c;
}

}  // namespace pqdist
