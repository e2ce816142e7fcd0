#include "mist/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace mist {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

SpanningTree::SpanningTree(int n, std::vector<Edge> edges)
    : edges_(std::move(edges)), degree_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw InstanceError("spanning tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw InstanceError("spanning tree on " + std::to_string(n) + " vertices needs " +
                        std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  std::sort(edges_.begin(), edges_.end());
  DisjointSets sets(n);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw InstanceError("tree edge out of range");
    if (!sets.unite(e.u, e.v)) throw InstanceError("tree edges contain a cycle");
    ++degree_[e.u];
    ++degree_[e.v];
  }
  internal_ = static_cast<int>(std::count_if(degree_.begin(), degree_.end(),
                                             [](int d) { return d >= 2; }));
}

std::vector<Vertex> SpanningTree::internal_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v) {
    if (is_internal(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::string> tree_problems(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<std::string> problems;
  const int n = g.n();
  if (static_cast<int>(edges.size()) != n - 1) {
    problems.push_back("expected " + std::to_string(n - 1) + " edges, found " +
                       std::to_string(edges.size()));
  }
  DisjointSets sets(std::max(n, 1));
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    const std::string name = std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      problems.push_back("edge " + name + " out of range");
      continue;
    }
    if (!seen.insert(e).second) problems.push_back("edge " + name + " repeated");
    if (!g.has_edge(e.u, e.v)) problems.push_back("edge " + name + " not in graph");
    if (!sets.unite(e.u, e.v)) problems.push_back("edge " + name + " closes a cycle");
  }
  for (Vertex v = 1; v < n; ++v) {
    if (sets.find(v) != sets.find(0)) {
      problems.push_back("vertex " + std::to_string(v + 1) + " not spanned");
      break;
    }
  }
  return problems;
}

std::vector<Edge> parse_tree_edges(std::string_view text) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag != "t") continue;
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw ParseError(line_no, "tree edge must be 't <u> <v>'");
    }
    if (u < 1 || v < 1 || u > 1'000'000 || v > 1'000'000) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (u == v) throw ParseError(line_no, "self-loop in tree");
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return edges;
}

std::string serialize_tree(const SpanningTree& t) {
  std::ostringstream out;
  for (const Edge& e : t.edges()) out << "t " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace mist
