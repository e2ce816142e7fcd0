#include "mist/reducer.hpp"

#include <algorithm>
#include <sstream>

namespace mist {

namespace {

// Working state keeps original numbering; deleted leaves stay as isolated,
// dead vertices until the final compaction.
struct WorkingGraph {
  Graph graph;
  std::vector<char> alive;
  ReductionTrace trace;

  explicit WorkingGraph(const Graph& g)
      : graph(g), alive(static_cast<std::size_t>(g.n()), 1) {
    trace.original_n = g.n();
  }

  std::vector<char> touches_leaf() const {
    std::vector<char> flag(static_cast<std::size_t>(graph.n()), 0);
    for (Vertex v = 0; v < graph.n(); ++v) {
      if (graph.is_leaf(v)) flag[graph.neighbors(v)[0]] = 1;
    }
    return flag;
  }

  bool delete_one_edge() {
    const auto bridges = cut_edges(graph);
    const auto leafy = touches_leaf();
    for (const Edge& e : graph.edges()) {
      if (!leafy[e.u] || !leafy[e.v]) continue;
      if (std::binary_search(bridges.begin(), bridges.end(), e)) continue;
      graph.remove_edge(e.u, e.v);
      trace.steps.push_back(ReductionStep::edge(e.u, e.v));
      return true;
    }
    return false;
  }

  bool delete_one_leaf() {
    const auto info = low_link_analysis(graph);
    for (Vertex v = 0; v < graph.n(); ++v) {
      if (!graph.is_leaf(v)) continue;
      const Vertex anchor = graph.neighbors(v)[0];
      if (!info.super_cut[anchor]) continue;
      graph.remove_edge(v, anchor);
      alive[v] = 0;
      trace.steps.push_back(ReductionStep::leaf(v, anchor));
      return true;
    }
    return false;
  }

  int edge_pass() {
    int fired = 0;
    while (delete_one_edge()) ++fired;
    return fired;
  }

  int leaf_pass() {
    int fired = 0;
    while (delete_one_leaf()) ++fired;
    return fired;
  }

  Reduction finish() && {
    const auto keep = trace.surviving_vertices();
    return Reduction{induced_subgraph(graph, keep), std::move(trace)};
  }
};

void require_connected(const Graph& g) {
  if (g.n() == 0) throw InstanceError("empty graph");
  if (!is_connected(g)) throw InstanceError("graph is disconnected");
}

}  // namespace

std::vector<Vertex> ReductionTrace::surviving_vertices() const {
  std::vector<char> dead(static_cast<std::size_t>(original_n), 0);
  for (const auto& step : steps) {
    if (step.kind == ReductionStep::Kind::LeafDeleted) dead[step.first] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < original_n; ++v) {
    if (!dead[v]) out.push_back(v);
  }
  return out;
}

Reduction safe_edge_deletions(const Graph& g) {
  require_connected(g);
  WorkingGraph work(g);
  work.edge_pass();
  return std::move(work).finish();
}

Reduction safe_leaf_deletions(const Graph& g) {
  require_connected(g);
  WorkingGraph work(g);
  work.leaf_pass();
  return std::move(work).finish();
}

Reduction reduce(const Graph& g) {
  require_connected(g);
  WorkingGraph work(g);
  while (true) {
    const int edges = work.edge_pass();
    const int leaves = work.leaf_pass();
    if (edges == 0 && leaves == 0) break;
  }
  return std::move(work).finish();
}

bool is_reduced(const Graph& g) {
  const auto info = low_link_analysis(g);
  std::vector<char> leafy(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!g.is_leaf(v)) continue;
    const Vertex anchor = g.neighbors(v)[0];
    if (info.super_cut[anchor]) return false;
    leafy[anchor] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (leafy[e.u] && leafy[e.v] &&
        !std::binary_search(info.bridges.begin(), info.bridges.end(), e)) {
      return false;
    }
  }
  return true;
}

Graph replay(const Graph& original, const ReductionTrace& trace) {
  if (trace.original_n != original.n()) throw InstanceError("trace is for a different graph");
  Graph work = original;
  for (const auto& step : trace.steps) {
    if (step.first < 0 || step.second < 0 || step.first >= work.n() || step.second >= work.n() ||
        !work.has_edge(step.first, step.second)) {
      throw InstanceError("trace step refers to a missing edge");
    }
    if (step.kind == ReductionStep::Kind::LeafDeleted) {
      if (!work.is_leaf(step.first)) throw InstanceError("trace deletes a non-leaf");
      if (!low_link_analysis(work).super_cut[step.second]) {
        throw InstanceError("trace anchor is not a super cut vertex");
      }
    }
    work.remove_edge(step.first, step.second);
  }
  const auto keep = trace.surviving_vertices();
  return induced_subgraph(work, keep);
}

SpanningTree restore(const SpanningTree& tree, const ReductionTrace& trace) {
  const auto keep = trace.surviving_vertices();
  if (static_cast<int>(keep.size()) != tree.n()) {
    throw InstanceError("tree has " + std::to_string(tree.n()) + " vertices but the trace leaves " +
                        std::to_string(keep.size()));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(trace.original_n));
  for (const Edge& e : tree.edges()) edges.emplace_back(keep[e.u], keep[e.v]);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (it->kind == ReductionStep::Kind::LeafDeleted) edges.emplace_back(it->first, it->second);
  }
  return SpanningTree(trace.original_n, std::move(edges));
}

std::string serialize_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << (step.kind == ReductionStep::Kind::EdgeDeleted ? "DE " : "DL ") << step.first + 1 << ' '
        << step.second + 1 << '\n';
  }
  return out.str();
}

ReductionTrace parse_trace(std::string_view text, int original_n) {
  ReductionTrace trace;
  trace.original_n = original_n;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || (tag != "DE" && tag != "DL")) continue;
    long long a = 0, b = 0;
    if (!(fields >> a >> b)) throw ParseError(line_no, "trace line needs two vertices");
    if (a < 1 || b < 1 || a > original_n || b > original_n) {
      throw ParseError(line_no, "vertex index out of range");
    }
    const auto u = static_cast<Vertex>(a - 1);
    const auto v = static_cast<Vertex>(b - 1);
    trace.steps.push_back(tag == "DE" ? ReductionStep::edge(u, v) : ReductionStep::leaf(u, v));
  }
  return trace;
}

}  // namespace mist
