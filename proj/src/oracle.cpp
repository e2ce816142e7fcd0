#include "mist/oracle.hpp"

#include <algorithm>
#include <queue>

namespace mist {

namespace {

void require(const Graph& g, int bound, bool need_connected) {
  if (g.n() > bound) {
    throw InstanceError("oracle limited to " + std::to_string(bound) + " vertices, graph has " +
                        std::to_string(g.n()));
  }
  if (need_connected && (g.n() == 0 || !is_connected(g))) throw InstanceError("graph is disconnected");
}

// Grows a tree from vertex 0. Each node branches on one edge from the tree
// to a new vertex: take it, or ban it for the rest of the subtree. Every
// spanning tree is reached exactly once. Extending from the newest vertex
// first makes the first trees path-like, which tightens pruning early.
class SpanningTreeSearch {
 public:
  explicit SpanningTreeSearch(const Graph& g)
      : g_(g), n_(g.n()), in_tree_(n_, 0), degree_(n_, 0),
        banned_(static_cast<std::size_t>(n_) * n_, 0) {}

  ExactMist run() {
    ceiling_ = n_ >= 3 ? n_ - 2 : 0;
    add_vertex(0);
    search();
    return ExactMist{SpanningTree(n_, best_edges_), best_};
  }

 private:
  bool banned(Vertex a, Vertex b) const { return banned_[a * n_ + b] != 0; }
  void set_banned(Vertex a, Vertex b, char value) { banned_[a * n_ + b] = banned_[b * n_ + a] = value; }

  void add_vertex(Vertex v) {
    in_tree_[v] = 1;
    order_.push_back(v);
  }

  int potential_internal() const {
    int count = 0;
    for (Vertex v = 0; v < n_; ++v) {
      int to_tree = 0, to_outside = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (banned(v, w)) continue;
        (in_tree_[w] ? to_tree : to_outside) += 1;
      }
      const int reach = in_tree_[v] ? degree_[v] + to_outside : std::min(1, to_tree) + to_outside;
      if (reach >= 2) ++count;
    }
    return count;
  }

  bool outside_reachable() const {
    std::vector<char> seen(in_tree_);
    std::vector<Vertex> stack(order_);
    int reached = static_cast<int>(order_.size());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (seen[w] || banned(v, w)) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == n_;
  }

  void search() {
    if (best_ == ceiling_) return;
    if (static_cast<int>(order_.size()) == n_) {
      const int internal = static_cast<int>(std::count_if(degree_.begin(), degree_.end(),
                                                          [](int d) { return d >= 2; }));
      if (internal > best_) {
        best_ = internal;
        best_edges_ = edges_;
      }
      return;
    }
    if (potential_internal() <= best_) return;

    Vertex from = -1, to = -1;
    for (auto it = order_.rbegin(); it != order_.rend() && from < 0; ++it) {
      for (Vertex w : g_.neighbors(*it)) {
        if (!in_tree_[w] && !banned(*it, w)) {
          from = *it;
          to = w;
          break;
        }
      }
    }
    if (from < 0) return;

    add_vertex(to);
    ++degree_[from];
    ++degree_[to];
    edges_.emplace_back(from, to);
    search();
    edges_.pop_back();
    --degree_[to];
    --degree_[from];
    in_tree_[to] = 0;
    order_.pop_back();

    set_banned(from, to, 1);
    if (outside_reachable()) search();
    set_banned(from, to, 0);
  }

  const Graph& g_;
  int n_;
  std::vector<char> in_tree_;
  std::vector<int> degree_;
  std::vector<char> banned_;
  std::vector<Vertex> order_;
  std::vector<Edge> edges_;
  std::vector<Edge> best_edges_;
  int best_ = -1;
  int ceiling_ = 0;
};

class PathCoverSearch {
 public:
  explicit PathCoverSearch(const Graph& g)
      : n_(g.n()), edges_(g.edges()), deg_(n_, 0), other_end_(n_), incident_(n_), taken_(edges_.size(), 0) {
    for (Vertex v = 0; v < n_; ++v) other_end_[v] = v;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(static_cast<int>(i));
      incident_[edges_[i].v].push_back(static_cast<int>(i));
    }
  }

  std::vector<Edge> run() {
    search(0);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < best_taken_.size(); ++i) {
      if (best_taken_[i]) out.push_back(edges_[i]);
    }
    return out;
  }

 private:
  int bound_from(int index) const {
    int slack = 0;
    for (Vertex v = 0; v < n_; ++v) {
      const int room = 2 - deg_[v];
      int avail = 0;
      for (int j : incident_[v]) {
        if (j >= index && deg_[edges_[j].other(v)] < 2) ++avail;
      }
      slack += std::min(room, avail);
    }
    return std::min(slack / 2, n_ - 1 - count_);
  }

  void search(int index) {
    if (best_ == n_ - 1) return;
    if (count_ + bound_from(index) <= best_) return;
    if (index == static_cast<int>(edges_.size())) {
      best_ = count_;
      best_taken_ = taken_;
      return;
    }
    const Edge e = edges_[index];
    if (deg_[e.u] < 2 && deg_[e.v] < 2 && other_end_[e.u] != e.v) {
      const Vertex a = other_end_[e.u], b = other_end_[e.v];
      const Vertex saved_a = other_end_[a], saved_b = other_end_[b];
      other_end_[a] = b;
      other_end_[b] = a;
      ++deg_[e.u];
      ++deg_[e.v];
      taken_[index] = 1;
      ++count_;
      search(index + 1);
      --count_;
      taken_[index] = 0;
      --deg_[e.v];
      --deg_[e.u];
      other_end_[b] = saved_b;
      other_end_[a] = saved_a;
    }
    search(index + 1);
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> deg_;
  std::vector<Vertex> other_end_;
  std::vector<std::vector<int>> incident_;
  std::vector<char> taken_, best_taken_;
  int count_ = 0;
  int best_ = -1;
};

// Farthest vertex from `start` inside the current component, smallest id on
// ties, with BFS parents.
Vertex farthest(const Graph& g, Vertex start, std::vector<Vertex>& parent) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  parent.assign(static_cast<std::size_t>(g.n()), -1);
  std::queue<Vertex> queue;
  dist[start] = 0;
  queue.push(start);
  Vertex best = start;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      parent[w] = v;
      queue.push(w);
    }
  }
  return best;
}

}  // namespace

ExactMist exact_mist(const Graph& g, int bound) {
  require(g, bound, true);
  return SpanningTreeSearch(g).run();
}

PathCycleCover exact_max_path_cover(const Graph& g, int bound) {
  require(g, bound, false);
  if (g.n() == 0) return PathCycleCover{};
  return cover_from_edges(g.n(), PathCoverSearch(g).run());
}

PathCycleCover tree_path_cover(const Graph& tree) {
  if (tree.n() < 2) throw InstanceError("tree path cover needs at least two vertices");
  if (!is_tree(tree)) throw InstanceError("input is not a tree");

  Graph work = tree;
  PathCycleCover cover;
  cover.n = tree.n();
  std::vector<Vertex> pending{0};
  std::vector<Vertex> parent;
  while (!pending.empty()) {
    const Vertex start = pending.back();
    pending.pop_back();
    const Vertex a = farthest(work, start, parent);
    const Vertex b = farthest(work, a, parent);
    std::vector<Vertex> path;
    for (Vertex v = b; v >= 0; v = parent[v]) path.push_back(v);

    std::vector<char> on_path(static_cast<std::size_t>(tree.n()), 0);
    for (Vertex v : path) on_path[v] = 1;
    for (Vertex v : path) {
      const std::vector<Vertex> nbrs(work.neighbors(v).begin(), work.neighbors(v).end());
      for (Vertex w : nbrs) {
        if (on_path[w]) continue;
        work.remove_edge(v, w);
        pending.push_back(w);
      }
    }
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    cover.components.push_back(CoverComponent{CoverComponent::Kind::Path, std::move(path)});
  }
  std::sort(cover.components.begin(), cover.components.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.vertices.begin(), x.vertices.end()) <
           *std::min_element(y.vertices.begin(), y.vertices.end());
  });
  return cover;
}

PathCycleCover tree_path_cover(const SpanningTree& tree) {
  return tree_path_cover(Graph::from_edges(tree.n(), tree.edges()));
}

InternalVertices internal_vertices(const Graph& g, const SpanningTree& t) {
  if (t.n() != g.n() || !tree_problems(g, t.edges()).empty()) {
    throw InstanceError("tree does not span the graph");
  }
  auto vs = t.internal_vertices();
  const int count = static_cast<int>(vs.size());
  return InternalVertices{std::move(vs), count};
}

}  // namespace mist
