#include "mist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mist {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InstanceError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n() || b >= n()) return false;
  const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(list.begin(), list.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n() || b >= n()) {
    throw InstanceError("edge endpoint out of range");
  }
  if (a == b) throw InstanceError("self-loop on vertex " + std::to_string(a + 1));
  auto& la = adj_[a];
  auto it = std::lower_bound(la.begin(), la.end(), b);
  if (it != la.end() && *it == b) {
    throw InstanceError("duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
  }
  la.insert(it, b);
  auto& lb = adj_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++m_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) throw InstanceError("removing a non-edge");
  auto& la = adj_[a];
  la.erase(std::lower_bound(la.begin(), la.end(), b));
  auto& lb = adj_[b];
  lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
  --m_;
}

VertexPartition connected_components(const Graph& g) {
  VertexPartition part;
  part.labels.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (part.labels[s] >= 0) continue;
    const int id = part.count++;
    part.labels[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (part.labels[w] < 0) {
          part.labels[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return part;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

LowLinkInfo low_link_analysis(const Graph& g) {
  const int n = g.n();
  LowLinkInfo info;
  info.super_cut.assign(static_cast<std::size_t>(n), 0);

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<int> separated(n, 0), children(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack;
  int clock = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = clock++;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto nbrs = g.neighbors(v);
      if (next[v] < nbrs.size()) {
        const Vertex w = nbrs[next[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = clock++;
          ++children[v];
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > disc[p]) info.bridges.emplace_back(p, v);
      if (low[v] >= disc[p]) ++separated[p];
    }
    // Root: deleting it leaves one piece per DFS child.
    if (children[root] >= 3) info.super_cut[root] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    // Non-root: separated subtrees plus the part containing the parent.
    if (parent[v] >= 0 && separated[v] >= 2) info.super_cut[v] = 1;
  }
  std::sort(info.bridges.begin(), info.bridges.end());
  return info;
}

std::vector<Edge> cut_edges(const Graph& g) { return low_link_analysis(g).bridges; }

std::vector<Vertex> super_cut_vertices(const Graph& g) {
  const auto info = low_link_analysis(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (info.super_cut[v]) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_int(std::string_view tok, int line_no) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  long long declared_m = 0;
  int seen_edges = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      const long long n = parse_int(tokens[1], line_no);
      declared_m = parse_int(tokens[2], line_no);
      if (n < 0 || n > 1'000'000) throw ParseError(line_no, "vertex count out of range");
      if (declared_m < 0 || declared_m > n * (n - 1) / 2) {
        throw ParseError(line_no, "edge count out of range");
      }
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
      const long long u = parse_int(tokens[1], line_no);
      const long long v = parse_int(tokens[2], line_no);
      if (u < 1 || v < 1 || u > g.n() || v > g.n()) {
        throw ParseError(line_no, "vertex index out of range");
      }
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      if (g.has_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      if (++seen_edges > declared_m) throw ParseError(line_no, "more edges than declared");
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p' header");
  if (seen_edges != declared_m) {
    throw ParseError(0, "declared " + std::to_string(declared_m) + " edges, found " +
                            std::to_string(seen_edges));
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (index[w] > static_cast<int>(i)) sub.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return sub;
}

}  // namespace mist
