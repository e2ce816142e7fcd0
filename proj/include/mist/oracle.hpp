#pragma once
// Exhaustive references used as ground truth. Every oracle refuses inputs
// above its size bound instead of degrading to an approximation.

#include <vector>

#include "mist/cover.hpp"
#include "mist/graph.hpp"
#include "mist/tree.hpp"

namespace mist {

struct ExactMist {
  SpanningTree tree;
  int internal = 0;
};

/// Maximum internal spanning tree by spanning-tree enumeration with a
/// potential-degree bound. Throws InstanceError when disconnected or
/// g.n() > bound.
ExactMist exact_mist(const Graph& g, int bound = 12);

/// Maximum path cover (paths only) by branch and bound over edges.
PathCycleCover exact_max_path_cover(const Graph& g, int bound = 12);

/// Path cover of a tree with at most (leaves - 1) paths: repeatedly peel a
/// longest leaf-to-leaf path and recurse on what remains.
PathCycleCover tree_path_cover(const Graph& tree);
PathCycleCover tree_path_cover(const SpanningTree& tree);

struct InternalVertices {
  std::vector<Vertex> vertices;
  int count = 0;
};

/// Internal vertices of t, after checking that t spans g.
InternalVertices internal_vertices(const Graph& g, const SpanningTree& t);

}  // namespace mist
