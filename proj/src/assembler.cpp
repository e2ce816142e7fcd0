#include "mist/assembler.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mist {

int JoinForest::alpha_violations() const {
  return static_cast<int>(std::count_if(log.begin(), log.end(),
                                        [](const AttachStep& s) { return !s.alpha_ok; }));
}

namespace {

class ForestBuilder {
 public:
  ForestBuilder(const Graph& g, const PathCycleCover& h)
      : g_(g), h_(h), tree_of_(static_cast<std::size_t>(g.n()), -1),
        degree_(static_cast<std::size_t>(g.n()), 0), joined_(h.components.size(), 0) {
    forest_.n = g.n();
  }

  JoinForest build() {
    const auto& comps = h_.components;
    std::vector<int> short_paths, singletons, cycles;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const int id = static_cast<int>(i);
      if (comps[i].is_cycle()) {
        cycles.push_back(id);
      } else if (comps[i].edge_count() >= 4) {
        const int t = new_tree();
        absorb(t, id, comps[i].vertices);
        record(AttachStep::Kind::LongPath, {id}, t);
      } else if (comps[i].edge_count() >= 1) {
        short_paths.push_back(id);
      } else {
        singletons.push_back(id);
      }
    }
    std::stable_sort(short_paths.begin(), short_paths.end(), [&](int a, int b) {
      return comps[a].edge_count() > comps[b].edge_count();
    });
    for (int id : short_paths) attach_short_path(id);
    for (int id : singletons) attach_singleton(id);
    for (int id : cycles) {
      if (!joined_[id]) attach_cycle(id);
    }
    return std::move(forest_);
  }

 private:
  int new_tree() {
    forest_.trees.emplace_back();
    return static_cast<int>(forest_.trees.size()) - 1;
  }

  void add_edge(int t, Vertex a, Vertex b) {
    auto& tree = forest_.trees[t];
    tree.edges.emplace_back(a, b);
    for (Vertex x : {a, b}) {
      if (++degree_[x] == 2) ++tree.internal;
    }
  }

  // Adds a component's vertices to tree t, laid out as the path `order`.
  void absorb(int t, int id, const std::vector<Vertex>& order) {
    auto& tree = forest_.trees[t];
    for (Vertex v : order) {
      tree_of_[v] = t;
      tree.vertices.push_back(v);
    }
    tree.components.push_back(id);
    tree.ledger_edges += h_.components[id].edge_count();
    joined_[id] = 1;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) add_edge(t, order[i], order[i + 1]);
  }

  void record(AttachStep::Kind kind, std::vector<int> ids, int t) {
    const auto& tree = forest_.trees[t];
    forest_.log.push_back(AttachStep{kind, std::move(ids), t, tree.internal, tree.ledger_edges,
                                     tree.alpha_ok()});
  }

  // Cycle laid out as a path starting at `start`, dropping the smaller of
  // the two cycle edges at `start`.
  std::vector<Vertex> open_cycle_at(int id, Vertex start) const {
    const auto& cyc = h_.components[id].vertices;
    const int len = static_cast<int>(cyc.size());
    const int j = static_cast<int>(std::find(cyc.begin(), cyc.end(), start) - cyc.begin());
    const Vertex before = cyc[(j + len - 1) % len];
    const Vertex after = cyc[(j + 1) % len];
    const int step = Edge(start, before) < Edge(start, after) ? 1 : -1;
    std::vector<Vertex> order;
    for (int s = 0; s < len; ++s) order.push_back(cyc[((j + step * s) % len + len) % len]);
    return order;
  }

  std::vector<Vertex> sorted_vertices(int id) const {
    auto vs = h_.components[id].vertices;
    std::sort(vs.begin(), vs.end());
    return vs;
  }

  void attach_short_path(int id) {
    const auto& p = h_.components[id];
    auto ends = p.endpoints();
    std::sort(ends.begin(), ends.end());
    for (Vertex u : ends) {
      for (Vertex x : g_.neighbors(u)) {
        const int t = tree_of_[x];
        if (t < 0) continue;
        auto order = p.vertices;
        if (order.front() != u) std::reverse(order.begin(), order.end());
        absorb(t, id, order);
        add_edge(t, u, x);
        record(AttachStep::Kind::ShortPath, {id}, t);
        return;
      }
    }
    fallback(id, p.vertices);
  }

  void attach_singleton(int id) {
    const Vertex s = h_.components[id].vertices.front();
    Vertex target = -1;
    for (Vertex x : g_.neighbors(s)) {
      if (tree_of_[x] >= 0 && degree_[x] >= 2) {
        target = x;
        break;
      }
    }
    if (target < 0) {
      ++forest_.fallbacks;
      for (Vertex x : g_.neighbors(s)) {
        if (tree_of_[x] >= 0) {
          target = x;
          break;
        }
      }
    }
    if (target < 0) {
      fallback(id, {s});
      return;
    }
    const int t = tree_of_[target];
    absorb(t, id, {s});
    add_edge(t, s, target);
    record(AttachStep::Kind::Singleton, {id}, t);
  }

  void attach_cycle(int id) {
    const auto vs = sorted_vertices(id);
    for (Vertex u : vs) {
      for (Vertex x : g_.neighbors(u)) {
        const int t = tree_of_[x];
        if (t < 0) continue;
        absorb(t, id, open_cycle_at(id, u));
        add_edge(t, u, x);
        record(AttachStep::Kind::CycleToTree, {id}, t);
        return;
      }
    }
    std::vector<int> owner(static_cast<std::size_t>(g_.n()), -1);
    for (std::size_t i = 0; i < h_.components.size(); ++i) {
      for (Vertex v : h_.components[i].vertices) owner[v] = static_cast<int>(i);
    }
    for (Vertex u : vs) {
      for (Vertex x : g_.neighbors(u)) {
        const int other = owner[x];
        if (other == id || joined_[other] || !h_.components[other].is_cycle()) continue;
        const int t = new_tree();
        absorb(t, id, open_cycle_at(id, u));
        absorb(t, other, open_cycle_at(other, x));
        add_edge(t, u, x);
        record(AttachStep::Kind::CyclePair, {id, other}, t);
        return;
      }
    }
    // Lone cycle: open it at its largest edge.
    const auto& cyc = h_.components[id].vertices;
    auto edges = h_.components[id].edges();
    const Edge drop = *std::max_element(edges.begin(), edges.end());
    const int j = static_cast<int>(std::find(cyc.begin(), cyc.end(), drop.u) - cyc.begin());
    const int len = static_cast<int>(cyc.size());
    const int step = cyc[(j + 1) % len] == drop.v ? -1 : 1;
    std::vector<Vertex> order;
    for (int s = 0; s < len; ++s) order.push_back(cyc[((j + step * s) % len + len) % len]);
    fallback(id, order);
  }

  void fallback(int id, const std::vector<Vertex>& order) {
    ++forest_.fallbacks;
    const int t = new_tree();
    absorb(t, id, order);
    record(AttachStep::Kind::Fallback, {id}, t);
  }

  const Graph& g_;
  const PathCycleCover& h_;
  std::vector<int> tree_of_;
  std::vector<int> degree_;
  std::vector<char> joined_;
  JoinForest forest_;
};

}  // namespace

JoinForest assemble_forest(const Graph& g1, const PathCycleCover& h) {
  const auto report = validate_cover(g1, h, 3);
  if (!report.valid()) throw InstanceError("invalid cover: " + report.violations.front());
  return ForestBuilder(g1, h).build();
}

std::vector<std::string> forest_problems(const Graph& g1, const PathCycleCover& h,
                                         const JoinForest& f) {
  std::vector<std::string> out;
  std::vector<int> tree_of(static_cast<std::size_t>(g1.n()), -1);
  for (std::size_t t = 0; t < f.trees.size(); ++t) {
    const auto& tree = f.trees[t];
    const std::string name = "tree " + std::to_string(t);
    for (Vertex v : tree.vertices) {
      if (tree_of[v] >= 0) out.push_back(name + ": vertex " + std::to_string(v + 1) + " in two trees");
      tree_of[v] = static_cast<int>(t);
    }
    std::vector<Vertex> local(tree.vertices);
    std::sort(local.begin(), local.end());
    std::vector<Edge> relabeled;
    for (const Edge& e : tree.edges) {
      if (!g1.has_edge(e.u, e.v)) out.push_back(name + ": non-edge in tree");
      const auto iu = std::lower_bound(local.begin(), local.end(), e.u) - local.begin();
      const auto iv = std::lower_bound(local.begin(), local.end(), e.v) - local.begin();
      if (iu >= static_cast<long>(local.size()) || local[iu] != e.u ||
          iv >= static_cast<long>(local.size()) || local[iv] != e.v) {
        out.push_back(name + ": edge leaves the tree's vertex set");
        continue;
      }
      relabeled.emplace_back(static_cast<Vertex>(iu), static_cast<Vertex>(iv));
    }
    try {
      const SpanningTree as_tree(static_cast<int>(local.size()), relabeled);
      if (as_tree.internal_count() != tree.internal) out.push_back(name + ": internal count stale");
    } catch (const InstanceError& e) {
      out.push_back(name + ": not a tree (" + e.what() + ")");
    }
    int ledger = 0;
    for (int id : tree.components) ledger += h.components[id].edge_count();
    if (ledger != tree.ledger_edges) out.push_back(name + ": ledger mismatch");
  }
  for (Vertex v = 0; v < g1.n(); ++v) {
    if (tree_of[v] < 0) out.push_back("vertex " + std::to_string(v + 1) + " not spanned");
  }
  std::vector<int> joins(h.components.size(), 0);
  for (const auto& tree : f.trees) {
    for (int id : tree.components) ++joins[id];
  }
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const auto& c = h.components[i];
    const std::string name = "component " + std::to_string(i);
    if (joins[i] != 1) {
      out.push_back(name + " listed by " + std::to_string(joins[i]) + " trees");
      continue;
    }
    const int t = tree_of[c.vertices.front()];
    if (t < 0) continue;
    const auto& tree = f.trees[t];
    if (std::find(tree.components.begin(), tree.components.end(), static_cast<int>(i)) ==
        tree.components.end()) {
      out.push_back(name + " ledgered in a different tree");
    }
    for (Vertex v : c.vertices) {
      if (tree_of[v] != t) out.push_back(name + " split across trees");
    }
    std::set<Edge> tree_edges(tree.edges.begin(), tree.edges.end());
    const auto ce = c.edges();
    const auto kept = std::count_if(ce.begin(), ce.end(), [&](const Edge& e) { return tree_edges.count(e) > 0; });
    const auto need = c.is_cycle() ? static_cast<long>(ce.size()) - 1 : static_cast<long>(ce.size());
    if (kept < need) out.push_back(name + " lost too many edges");
  }
  return out;
}

SpanningTree link_forest(const Graph& g1, const JoinForest& f) {
  const int n = g1.n();
  std::vector<int> tree_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> members(f.trees.size());
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < f.trees.size(); ++t) {
    for (Vertex v : f.trees[t].vertices) tree_of[v] = static_cast<int>(t);
    members[t] = f.trees[t].vertices;
    std::sort(members[t].begin(), members[t].end());
    edges.insert(edges.end(), f.trees[t].edges.begin(), f.trees[t].edges.end());
  }
  if (n == 0) throw InstanceError("empty graph");
  if (std::find(tree_of.begin(), tree_of.end(), -1) != tree_of.end()) {
    throw InstanceError("forest does not span the graph");
  }
  std::vector<char> reached(f.trees.size(), 0);
  std::queue<int> queue;
  reached[tree_of[0]] = 1;
  queue.push(tree_of[0]);
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop();
    for (Vertex v : members[t]) {
      for (Vertex x : g1.neighbors(v)) {
        const int other = tree_of[x];
        if (reached[other]) continue;
        reached[other] = 1;
        edges.emplace_back(v, x);
        queue.push(other);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), 0) != reached.end()) {
    throw InstanceError("graph is disconnected");
  }
  return SpanningTree(n, std::move(edges));
}

std::string_view to_string(ShortCircuit s) {
  switch (s) {
    case ShortCircuit::None: return "none";
    case ShortCircuit::Tree: return "tree";
    case ShortCircuit::HamiltonianPath: return "hamiltonian-path";
    case ShortCircuit::SingleCycle: return "single-cycle";
  }
  return "none";
}

ApproxResult approx_mist(const Graph& g, const ApproxOptions& options) {
  if (g.n() < 2) throw InstanceError("graph needs at least two vertices");
  if (!is_connected(g)) throw InstanceError("graph is disconnected");

  ApproxStats stats;
  stats.n = g.n();
  stats.m = g.m();
  stats.mode = options.cover.mode;

  auto reduction = reduce(g);
  const Graph& g1 = reduction.graph;
  stats.reduced_n = g1.n();
  stats.reduced_m = g1.m();
  stats.trace_steps = static_cast<int>(reduction.trace.steps.size());

  JoinForest forest;
  SpanningTree reduced_tree;
  if (is_tree(g1)) {
    stats.short_circuit = ShortCircuit::Tree;
    reduced_tree = SpanningTree(g1.n(), g1.edges());
  } else {
    auto cover = max_path_cycle_cover(g1, options.cover);
    stats.cover_edges = cover.cover.edge_count();
    stats.unconstrained_edges = cover.stats.unconstrained_edges;
    stats.triangles_repaired = cover.stats.triangles_repaired;
    stats.lossy_repairs = cover.stats.lossy_repairs;

    if (cover.cover.components.size() == 1) {
      const auto& only = cover.cover.components.front();
      auto edges = only.edges();
      if (only.is_cycle()) {
        stats.short_circuit = ShortCircuit::SingleCycle;
        edges.erase(std::max_element(edges.begin(), edges.end()));
      } else {
        stats.short_circuit = ShortCircuit::HamiltonianPath;
      }
      reduced_tree = SpanningTree(g1.n(), std::move(edges));
    } else {
      ReconstructOptions rec_options;
      rec_options.maximality_guard = options.maximality_guard;
      auto rec = reconstruct(g1, cover.cover, rec_options);
      stats.reconstruct_steps = rec.steps;
      stats.normal_form = rec.normal_form;
      forest = assemble_forest(g1, rec.cover);
      reduced_tree = link_forest(g1, forest);
    }
  }

  stats.forest_trees = static_cast<int>(forest.trees.size());
  stats.alpha_violations = forest.alpha_violations();
  stats.fallbacks = forest.fallbacks;
  for (const auto& t : forest.trees) {
    stats.alpha_margins.push_back(t.alpha_margin());
    stats.tree_alpha_ok.push_back(t.alpha_ok());
  }

  auto tree = restore(reduced_tree, reduction.trace);
  stats.internal = tree.internal_count();
  stats.guarantee_ok = stats.short_circuit != ShortCircuit::None ||
                       (stats.alpha_violations == 0 && 4 * stats.internal >= 3 * stats.cover_edges);
  return ApproxResult{std::move(tree), std::move(stats), std::move(forest)};
}

std::string serialize_stats(const ApproxStats& s) {
  std::ostringstream out;
  auto join = [](const auto& values) {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) text += ',';
      text += std::to_string(static_cast<int>(values[i]));
    }
    return text;
  };
  out << "n=" << s.n << '\n'
      << "m=" << s.m << '\n'
      << "reduced_n=" << s.reduced_n << '\n'
      << "reduced_m=" << s.reduced_m << '\n'
      << "trace_steps=" << s.trace_steps << '\n'
      << "mode=" << to_string(s.mode) << '\n'
      << "cover_edges=" << s.cover_edges << '\n'
      << "unconstrained_edges=" << s.unconstrained_edges << '\n'
      << "triangles_repaired=" << s.triangles_repaired << '\n'
      << "lossy_repairs=" << s.lossy_repairs << '\n'
      << "short_circuit=" << to_string(s.short_circuit) << '\n'
      << "reconstruct_steps=" << s.reconstruct_steps << '\n'
      << "normal_form=" << (s.normal_form ? 1 : 0) << '\n'
      << "forest_trees=" << s.forest_trees << '\n'
      << "alpha_violations=" << s.alpha_violations << '\n'
      << "fallbacks=" << s.fallbacks << '\n'
      << "alpha_margins=" << join(s.alpha_margins) << '\n'
      << "tree_alpha_ok=" << join(s.tree_alpha_ok) << '\n'
      << "internal=" << s.internal << '\n'
      << "guarantee_ok=" << (s.guarantee_ok ? 1 : 0) << '\n';
  return out.str();
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0 || line.find(' ') < eq) continue;
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

}  // namespace mist
