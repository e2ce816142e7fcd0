#include "mist/matching.hpp"

#include <algorithm>
#include <queue>

namespace mist {

namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.n()),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_tree_(n_, 0),
        in_blossom_(n_, 0),
        mark_(n_, 0) {}

  std::vector<Vertex> run() {
    // Greedy start; augmentations fix up whatever it gets wrong.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      const Vertex end = find_augmenting_path(root);
      if (end >= 0) augment(end);
    }
    return mate_;
  }

 private:
  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::fill(mark_.begin(), mark_.end(), 0);
    while (true) {
      a = base_[a];
      mark_[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;

    std::queue<Vertex> queue;
    in_tree_[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g_.neighbors(v)) {
        if (base_[v] == base_[w] || mate_[v] == w) continue;
        if (w == root || (mate_[w] >= 0 && parent_[mate_[w]] >= 0)) {
          // Odd cycle: shrink the blossom onto its base.
          const Vertex b = lowest_common_ancestor(v, w);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, w);
          mark_path(w, b, v);
          for (Vertex x = 0; x < n_; ++x) {
            if (!in_blossom_[base_[x]]) continue;
            base_[x] = b;
            if (!in_tree_[x]) {
              in_tree_[x] = 1;
              queue.push(x);
            }
          }
        } else if (parent_[w] < 0) {
          parent_[w] = v;
          if (mate_[w] < 0) return w;
          in_tree_[mate_[w]] = 1;
          queue.push(mate_[w]);
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v >= 0) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<char> in_tree_, in_blossom_, mark_;
};

}  // namespace

std::vector<Vertex> max_matching_mates(const Graph& g) { return BlossomMatcher(g).run(); }

Matching max_matching(const Graph& g) {
  const auto mate = max_matching_mates(g);
  Matching m;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  }
  return m;
}

bool is_matching(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace mist
