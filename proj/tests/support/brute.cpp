#include "brute.hpp"

#include <algorithm>
#include <numeric>

namespace brute {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int count_with(int n, const std::vector<Edge>& edges, Vertex skip) {
  Dsu dsu(n);
  for (const Edge& e : edges) {
    if (e.u != skip && e.v != skip) dsu.unite(e.u, e.v);
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (v != skip && dsu.find(v) == v) ++count;
  }
  return count;
}

int matching_rec(const Graph& g, std::vector<char>& used, Vertex from) {
  while (from < g.n() && used[from]) ++from;
  if (from == g.n()) return 0;
  used[from] = 1;
  int best = matching_rec(g, used, from + 1);
  for (Vertex w : g.neighbors(from)) {
    if (used[w]) continue;
    used[w] = 1;
    best = std::max(best, 1 + matching_rec(g, used, from + 1));
    used[w] = 0;
  }
  used[from] = 0;
  return best;
}

struct CensusRun {
  const Graph& g;
  std::vector<Edge> edges;
  std::vector<int> deg;
  std::vector<Edge> chosen;
  bool collect;
  Census out;

  void finish() {
    const int n = g.n();
    Dsu dsu(n);
    for (const Edge& e : chosen) dsu.unite(e.u, e.v);
    std::vector<int> vcount(static_cast<std::size_t>(n), 0), ecount(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++vcount[dsu.find(v)];
    for (const Edge& e : chosen) ++ecount[dsu.find(e.u)];
    bool triangle = false, any_cycle = false;
    for (int r = 0; r < n; ++r) {
      if (vcount[r] > 0 && ecount[r] == vcount[r]) {
        any_cycle = true;
        if (vcount[r] == 3) triangle = true;
      }
    }
    const int k = static_cast<int>(chosen.size());
    out.unconstrained = std::max(out.unconstrained, k);
    if (!any_cycle) out.paths_only = std::max(out.paths_only, k);
    if (!triangle) {
      if (collect) {
        if (k > out.constrained) out.constrained_optima.clear();
        if (k >= out.constrained) out.constrained_optima.push_back(chosen);
      }
      out.constrained = std::max(out.constrained, k);
    }
  }

  void run(std::size_t i) {
    if (i == edges.size()) {
      finish();
      return;
    }
    run(i + 1);
    const Edge e = edges[i];
    if (deg[e.u] < 2 && deg[e.v] < 2) {
      ++deg[e.u];
      ++deg[e.v];
      chosen.push_back(e);
      run(i + 1);
      chosen.pop_back();
      --deg[e.v];
      --deg[e.u];
    }
  }
};

}  // namespace

int component_count(const Graph& g) { return count_with(g.n(), g.edges(), -1); }

int component_count_without_vertex(const Graph& g, Vertex v) { return count_with(g.n(), g.edges(), v); }

std::vector<Edge> bridges(const Graph& g) {
  const auto all = g.edges();
  const int base = component_count(g);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto rest = all;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (count_with(g.n(), rest, -1) > base) out.push_back(all[i]);
  }
  return out;
}

std::vector<Vertex> super_cut_vertices(const Graph& g) {
  const int base = component_count(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (component_count_without_vertex(g, v) >= base + 2) out.push_back(v);
  }
  return out;
}

int max_matching_size(const Graph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  return matching_rec(g, used, 0);
}

Census degree2_census(const Graph& g, bool collect_optima) {
  CensusRun run{g, g.edges(), std::vector<int>(static_cast<std::size_t>(g.n()), 0), {}, collect_optima, {}};
  run.run(0);
  return run.out;
}

bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != g.n() - 1) return false;
  Dsu dsu(g.n());
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v) || !dsu.unite(e.u, e.v)) return false;
  }
  return true;
}

int internal_count(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 2; }));
}

int leaf_count(const Graph& tree) {
  int leaves = 0;
  for (Vertex v = 0; v < tree.n(); ++v) leaves += tree.degree(v) == 1 ? 1 : 0;
  return leaves;
}

int max_internal(const Graph& g) {
  const int n = g.n();
  if (n <= 2) return 0;
  const auto all = g.edges();
  const int m = static_cast<int>(all.size());
  std::vector<int> pick(static_cast<std::size_t>(n - 1));
  std::iota(pick.begin(), pick.end(), 0);
  int best = -1;
  if (m < n - 1) return best;
  while (true) {
    std::vector<Edge> subset;
    for (int i : pick) subset.push_back(all[i]);
    if (is_spanning_tree(g, subset)) best = std::max(best, internal_count(n, subset));
    // next combination
    int i = n - 2;
    while (i >= 0 && pick[i] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace brute

namespace fixtures {

Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph two_triangles_sharing() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph c4_two_leaves() { return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}}); }

}  // namespace fixtures
