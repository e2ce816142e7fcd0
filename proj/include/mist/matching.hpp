#pragma once

#include <vector>

#include "mist/graph.hpp"

namespace mist {

/// A set of vertex-disjoint edges, ascending.
struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

/// Maximum-cardinality matching on a general graph (Edmonds' blossom
/// shrinking, O(n^3)). Deterministic: augmenting searches start from free
/// vertices in ascending order and scan neighbors ascending.
Matching max_matching(const Graph& g);

/// Mate of every vertex under max_matching, or -1.
std::vector<Vertex> max_matching_mates(const Graph& g);

bool is_matching(const Graph& g, const std::vector<Edge>& edges);

}  // namespace mist
