#pragma once
// Undirected simple graphs with sorted adjacency, plus the structural
// queries (bridges, super cut vertices, components) the pipeline relies on.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mist/errors.hpp"

namespace mist {

using Vertex = int;

/// Undirected edge, always stored with u < v so that edges compare
/// lexicographically as unordered pairs.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Throws InstanceError on self-loops,
  /// duplicates, or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool is_leaf(Vertex v) const { return adj_[v].size() == 1; }
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges in ascending lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

/// Component labeling: labels are 0..count-1 in order of first appearance
/// when scanning vertices in ascending order.
struct VertexPartition {
  std::vector<int> labels;
  int count = 0;
};

VertexPartition connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Bridges of g, ascending.
std::vector<Edge> cut_edges(const Graph& g);

/// Vertices whose removal raises the component count by at least two,
/// ascending.
std::vector<Vertex> super_cut_vertices(const Graph& g);

/// Per-vertex flags for both queries, from one low-link pass.
struct LowLinkInfo {
  std::vector<Edge> bridges;
  std::vector<char> super_cut;
};
LowLinkInfo low_link_analysis(const Graph& g);

/// Parses the line-oriented "p n m / e u v" format (1-based vertices,
/// optional "c" comment lines). Throws ParseError with the offending line.
Graph parse_graph(std::string_view text);

/// Serializes in the same format: header then edges in ascending order.
std::string serialize_graph(const Graph& g);

/// Induced subgraph on `keep` (ascending), renumbered 0..k-1 in that order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace mist
