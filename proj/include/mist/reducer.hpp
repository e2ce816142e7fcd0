#pragma once
// Safe reductions that preserve the optimum internal-vertex count:
// deleting a non-bridge edge whose ends both touch leaves, and deleting a
// leaf hanging off a super cut vertex. The trace records every deletion in
// original vertex ids so a tree of the reduced graph can be lifted back.

#include <string>
#include <string_view>
#include <vector>

#include "mist/graph.hpp"
#include "mist/tree.hpp"

namespace mist {

struct ReductionStep {
  enum class Kind { EdgeDeleted, LeafDeleted };
  Kind kind = Kind::EdgeDeleted;
  Vertex first = 0;   // edge endpoint, or the deleted leaf
  Vertex second = 0;  // edge endpoint, or the anchor the leaf hung from

  static ReductionStep edge(Vertex u, Vertex v) { return {Kind::EdgeDeleted, u, v}; }
  static ReductionStep leaf(Vertex leaf, Vertex anchor) { return {Kind::LeafDeleted, leaf, anchor}; }

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  int original_n = 0;
  std::vector<ReductionStep> steps;

  /// Original ids of the vertices that survive, ascending. Vertex i of the
  /// reduced graph is surviving_vertices()[i].
  std::vector<Vertex> surviving_vertices() const;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct Reduction {
  Graph graph;  // renumbered onto the surviving vertices
  ReductionTrace trace;
};

Reduction safe_edge_deletions(const Graph& g);
Reduction safe_leaf_deletions(const Graph& g);

/// Alternates both passes until neither fires.
Reduction reduce(const Graph& g);

bool is_reduced(const Graph& g);

/// Re-applies a trace to the original graph, checking each step's
/// precondition. Throws InstanceError on a step that does not apply.
Graph replay(const Graph& original, const ReductionTrace& trace);

/// Lifts a spanning tree of the reduced graph to one of the original graph
/// by re-hanging every deleted leaf from its anchor.
SpanningTree restore(const SpanningTree& tree, const ReductionTrace& trace);

/// "DE u v" / "DL leaf anchor" lines, 1-based original ids.
std::string serialize_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text, int original_n);

}  // namespace mist
