#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pqdist/graph.hpp"

namespace pqdist {

using GraphVisitor = std::function<void(const Graph&)>;

/// One representative per isomorphism class of order n, by canonical
/// augmentation. Representatives are canonical graphs.
/// With parts > 1 only the subtree of parents whose index at order
/// split_order is congruent to part modulo parts is visited.
void generate_all(int n, const GraphVisitor& visit, int parts = 1, int part = 0);
std::vector<Graph> generate_all(int n);

/// Independent strategy: breadth-first extension with a global dedup set.
std::vector<Graph> generate_by_dedup(int n);

/// Labelled enumeration of all 2^(n(n-1)/2) graphs with canonical dedup.
std::vector<Graph> generate_brute_force(int n);

/// All 2^order one-vertex extensions, new vertex last.
std::vector<Graph> extensions(const Graph& g);

/// Number of isomorphism classes, counted without materializing.
std::uint64_t count_graphs(int n);

}  // namespace pqdist
