#include "mist/cover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mist/matching.hpp"

namespace mist {

std::vector<Vertex> CoverComponent::endpoints() const {
  if (is_cycle() || vertices.empty()) return {};
  if (vertices.size() == 1) return {vertices.front()};
  return {vertices.front(), vertices.back()};
}

std::vector<Edge> CoverComponent::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  if (is_cycle() && vertices.size() >= 2) out.emplace_back(vertices.back(), vertices.front());
  return out;
}

int PathCycleCover::edge_count() const {
  int total = 0;
  for (const auto& c : components) total += c.edge_count();
  return total;
}

std::vector<Edge> PathCycleCover::edges() const {
  std::vector<Edge> out;
  for (const auto& c : components) {
    const auto e = c.edges();
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathCycleCover cover_from_edges(int n, const std::vector<Edge>& edges) {
  std::vector<std::array<Vertex, 2>> nbr(static_cast<std::size_t>(n), {-1, -1});
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw InstanceError("cover edge out of range");
    if (deg[e.u] == 2 || deg[e.v] == 2) throw InstanceError("cover vertex has degree above 2");
    nbr[e.u][deg[e.u]++] = e.v;
    nbr[e.v][deg[e.v]++] = e.u;
  }
  for (auto& pair : nbr) {
    if (pair[1] >= 0 && pair[1] < pair[0]) std::swap(pair[0], pair[1]);
  }

  PathCycleCover cover;
  cover.n = n;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  auto walk = [&](Vertex start, CoverComponent::Kind kind) {
    CoverComponent c;
    c.kind = kind;
    Vertex prev = -1, cur = start;
    while (cur >= 0 && !seen[cur]) {
      seen[cur] = 1;
      c.vertices.push_back(cur);
      const Vertex next = nbr[cur][0] != prev && nbr[cur][0] >= 0 ? nbr[cur][0] : nbr[cur][1];
      prev = cur;
      cur = next;
    }
    cover.components.push_back(std::move(c));
  };
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v] && deg[v] <= 1) walk(v, CoverComponent::Kind::Path);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) walk(v, CoverComponent::Kind::Cycle);
  }
  std::sort(cover.components.begin(), cover.components.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });
  return cover;
}

CoverReport validate_cover(const Graph& g, const PathCycleCover& h, int min_cycle) {
  CoverReport report;
  auto& out = report.violations;
  const int n = g.n();
  if (h.n != n) out.push_back("cover is for " + std::to_string(h.n) + " vertices, graph has " + std::to_string(n));
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const auto& c = h.components[i];
    const std::string name = (c.is_cycle() ? "cycle " : "path ") + std::to_string(i);
    if (c.vertices.empty()) {
      out.push_back(name + " is empty");
      continue;
    }
    bool in_range = true;
    for (Vertex v : c.vertices) {
      if (v < 0 || v >= n) {
        out.push_back(name + " has vertex out of range");
        in_range = false;
        break;
      }
      ++hits[v];
    }
    if (!in_range) continue;
    if (c.is_cycle() && c.vertices.size() < 3) out.push_back(name + " has fewer than 3 vertices");
    if (c.is_cycle() && static_cast<int>(c.vertices.size()) < min_cycle) {
      out.push_back(name + " has length " + std::to_string(c.vertices.size()) + " below " +
                    std::to_string(min_cycle));
    }
    for (const Edge& e : c.edges()) {
      if (e.u == e.v) continue;
      ++deg[e.u];
      ++deg[e.v];
      if (!g.has_edge(e.u, e.v)) {
        out.push_back(name + " uses non-edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] != 1) {
      out.push_back("vertex " + std::to_string(v + 1) + " covered " + std::to_string(hits[v]) + " times");
    }
    if (deg[v] > 2) out.push_back("vertex " + std::to_string(v + 1) + " has cover degree " + std::to_string(deg[v]));
  }
  return report;
}

std::vector<Edge> max_two_matching(const Graph& g) {
  // Ports 2v and 2v+1 carry v's capacity of two. Edge i becomes the pair
  // (2n+2i, 2n+2i+1) joined to each other and to the ports of its ends; the
  // edge is taken when both halves are matched into ports.
  const int n = g.n();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph gadget(2 * n + 2 * m);
  for (int i = 0; i < m; ++i) {
    const Vertex half_u = 2 * n + 2 * i;
    const Vertex half_v = half_u + 1;
    gadget.add_edge(half_u, half_v);
    gadget.add_edge(2 * edges[i].u, half_u);
    gadget.add_edge(2 * edges[i].u + 1, half_u);
    gadget.add_edge(2 * edges[i].v, half_v);
    gadget.add_edge(2 * edges[i].v + 1, half_v);
  }
  const auto mate = max_matching_mates(gadget);
  int matched = 0;
  for (Vertex x = 0; x < gadget.n(); ++x) matched += mate[x] > x ? 1 : 0;

  std::vector<Edge> chosen;
  for (int i = 0; i < m; ++i) {
    const Vertex half_u = 2 * n + 2 * i;
    const Vertex mu = mate[half_u], mv = mate[half_u + 1];
    if (mu >= 0 && mu < 2 * n && mv >= 0 && mv < 2 * n) chosen.push_back(edges[i]);
  }
  if (static_cast<int>(chosen.size()) != matched - m) {
    throw InvariantViolation("gadget matching does not project to a maximum 2-matching");
  }
  return chosen;
}

std::string_view to_string(CoverMode mode) {
  return mode == CoverMode::Exact ? "exact" : "heuristic";
}

CoverMode parse_cover_mode(std::string_view text) {
  if (text == "exact") return CoverMode::Exact;
  if (text == "heuristic") return CoverMode::Heuristic;
  throw InstanceError("unknown cover mode '" + std::string(text) + "'");
}

namespace {

// Include-first branch and bound over edges in ascending order. The first
// maximum found is the lexicographically smallest optimal edge set; ties
// are never replaced and branches that can only tie are pruned.
class ConstrainedCoverSearch {
 public:
  ConstrainedCoverSearch(const Graph& g, bool forbid_triangles, int upper_bound, int floor)
      : n_(g.n()),
        edges_(g.edges()),
        forbid_triangles_(forbid_triangles),
        upper_bound_(upper_bound),
        best_(floor),
        deg_(static_cast<std::size_t>(n_), 0),
        partner_(static_cast<std::size_t>(n_), {-1, -1}),
        incident_(static_cast<std::size_t>(n_)),
        taken_(edges_.size(), 0) {
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

  long long nodes() const { return nodes_; }
  bool found() const { return found_; }

 private:
  int bound_from(int index) const {
    int slack = 0;
    for (Vertex v = 0; v < n_; ++v) {
      const int room = 2 - deg_[v];
      if (room == 0) continue;
      int avail = 0;
      for (int j : incident_[v]) {
        if (j < index) continue;
        if (deg_[edges_[j].other(v)] < 2 && ++avail == room) break;
      }
      slack += std::min(room, avail);
    }
    return slack / 2;
  }

  bool closes_triangle(const Edge& e) const {
    for (Vertex w : partner_[e.u]) {
      if (w < 0) continue;
      for (Vertex x : partner_[w]) {
        if (x == e.v) return true;
      }
    }
    return false;
  }

  void link(Vertex a, Vertex b) { partner_[a][deg_[a]++] = b; }
  void unlink(Vertex a) { partner_[a][--deg_[a]] = -1; }

  void search(int index) {
    ++nodes_;
    if (best_ == upper_bound_) return;
    if (taken_count_ + bound_from(index) <= best_) return;
    if (index == static_cast<int>(edges_.size())) {
      best_ = taken_count_;
      best_taken_ = taken_;
      found_ = true;
      return;
    }
    const Edge e = edges_[index];
    if (deg_[e.u] < 2 && deg_[e.v] < 2 && !(forbid_triangles_ && closes_triangle(e))) {
      link(e.u, e.v);
      link(e.v, e.u);
      taken_[index] = 1;
      ++taken_count_;
      search(index + 1);
      --taken_count_;
      taken_[index] = 0;
      unlink(e.v);
      unlink(e.u);
    }
    search(index + 1);
  }

  int n_;
  std::vector<Edge> edges_;
  bool forbid_triangles_;
  int upper_bound_;
  int best_;
  std::vector<int> deg_;
  std::vector<std::array<Vertex, 2>> partner_;
  std::vector<std::vector<int>> incident_;
  std::vector<char> taken_, best_taken_;
  int taken_count_ = 0;
  bool found_ = false;
  long long nodes_ = 0;
};

int find_triangle(const PathCycleCover& h) {
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const auto& c = h.components[i];
    if (c.is_cycle() && c.vertices.size() == 3) return static_cast<int>(i);
  }
  return -1;
}

// Rewrites one triangle. Prefers re-routing a triangle vertex into an
// endpoint of another path (edge count unchanged); otherwise drops the
// triangle's largest edge. Returns true when an edge was lost.
bool repair_triangle(const Graph& g, std::vector<Edge>& edges, const PathCycleCover& h, int tri) {
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    for (Vertex v : h.components[i].vertices) owner[v] = static_cast<int>(i);
  }
  auto tri_vertices = h.components[tri].vertices;
  std::sort(tri_vertices.begin(), tri_vertices.end());
  auto erase_edge = [&](Edge e) { edges.erase(std::find(edges.begin(), edges.end(), e)); };

  for (Vertex a : tri_vertices) {
    for (Vertex x : g.neighbors(a)) {
      const int k = owner[x];
      if (k == tri || !h.components[k].is_path()) continue;
      const auto ends = h.components[k].endpoints();
      if (std::find(ends.begin(), ends.end(), x) == ends.end()) continue;
      Vertex b = -1;
      for (Vertex t : tri_vertices) {
        if (t != a && (b < 0 || t < b)) b = t;
      }
      erase_edge(Edge(a, b));
      edges.emplace_back(a, x);
      return false;
    }
  }
  erase_edge(Edge(tri_vertices[1], tri_vertices[2]));
  return true;
}

}  // namespace

CoverResult max_path_cycle_cover(const Graph& g, const CoverOptions& options) {
  if (g.n() == 0 || !is_connected(g)) throw InstanceError("graph is disconnected");
  if (options.min_cycle != 3 && options.min_cycle != 4) {
    throw InstanceError("min_cycle must be 3 or 4");
  }
  CoverResult result;
  auto two_matching = max_two_matching(g);
  result.stats.unconstrained_edges = static_cast<int>(two_matching.size());
  const bool forbid_triangles = options.min_cycle == 4;

  // Heuristic: repair triangles of the unconstrained optimum.
  auto heuristic_edges = two_matching;
  PathCycleCover heuristic = cover_from_edges(g.n(), heuristic_edges);
  if (forbid_triangles) {
    for (int tri = find_triangle(heuristic); tri >= 0; tri = find_triangle(heuristic)) {
      ++result.stats.triangles_repaired;
      if (repair_triangle(g, heuristic_edges, heuristic, tri)) ++result.stats.lossy_repairs;
      std::sort(heuristic_edges.begin(), heuristic_edges.end());
      heuristic = cover_from_edges(g.n(), heuristic_edges);
    }
  }
  if (options.mode == CoverMode::Heuristic) {
    result.cover = std::move(heuristic);
    return result;
  }

  if (g.n() > options.exact_bound) {
    throw InstanceError("exact cover limited to " + std::to_string(options.exact_bound) +
                        " vertices, graph has " + std::to_string(g.n()));
  }
  result.stats.triangles_repaired = 0;
  result.stats.lossy_repairs = 0;
  ConstrainedCoverSearch search(g, forbid_triangles, result.stats.unconstrained_edges,
                                heuristic.edge_count() - 1);
  auto best = search.run();
  if (!search.found()) throw InvariantViolation("exact cover search found no cover");
  result.stats.search_nodes = search.nodes();
  result.cover = cover_from_edges(g.n(), best);
  return result;
}

std::string serialize_cover(const PathCycleCover& h) {
  std::ostringstream out;
  for (const auto& c : h.components) {
    out << (c.is_cycle() ? 'C' : 'P');
    for (Vertex v : c.vertices) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

PathCycleCover parse_cover(std::string_view text, int n) {
  PathCycleCover h;
  h.n = n;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || (tag != "P" && tag != "C")) continue;
    CoverComponent c;
    c.kind = tag == "C" ? CoverComponent::Kind::Cycle : CoverComponent::Kind::Path;
    long long v = 0;
    while (fields >> v) {
      if (v < 1 || v > n) throw ParseError(line_no, "vertex index out of range");
      c.vertices.push_back(static_cast<Vertex>(v - 1));
    }
    if (!fields.eof()) throw ParseError(line_no, "expected vertex indices");
    if (c.vertices.empty()) throw ParseError(line_no, "empty component");
    h.components.push_back(std::move(c));
  }
  return h;
}

}  // namespace mist
