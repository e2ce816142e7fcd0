#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

/// A spanning tree over vertices 0..n-1 with cached tree degrees.
/// Construction checks tree-ness (n-1 edges, connected, in range) but not
/// membership in any particular host graph; see tree_problems for that.
class SpanningTree {
 public:
  SpanningTree() = default;
  SpanningTree(int n, std::vector<Edge> edges);

  int n() const { return static_cast<int>(degree_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(Vertex v) const { return degree_[v]; }
  bool is_internal(Vertex v) const { return degree_[v] >= 2; }
  int internal_count() const { return internal_; }
  std::vector<Vertex> internal_vertices() const;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::vector<Edge> edges_;  // ascending
  std::vector<int> degree_;
  int internal_ = 0;
};

/// Everything wrong with `edges` as a spanning tree of g; empty when valid.
std::vector<std::string> tree_problems(const Graph& g, const std::vector<Edge>& edges);

/// Parses "t u v" lines (1-based); blank, comment and key=value lines are
/// skipped so that `solve` output can be fed back in directly.
std::vector<Edge> parse_tree_edges(std::string_view text);

std::string serialize_tree(const SpanningTree& t);

}  // namespace mist
