#include "mist/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "mist/errors.hpp"
#include "mist/generators.hpp"

namespace mist {

namespace {

// Stable color refinement starting from degrees; returns a color per
// vertex, where colors are ranks of isomorphism-invariant signatures.
std::vector<int> refine(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      for (Vertex w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      next[sig[i].second] = rank;
    }
    color = std::move(next);
    if (rank + 1 == classes) break;
    classes = rank + 1;
  }
  return color;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.n()), used_(n_, 0) {
    const auto color = refine(g);
    by_color_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) by_color_[v] = v;
    std::sort(by_color_.begin(), by_color_.end(),
              [&](Vertex a, Vertex b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });
    cell_of_position_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) cell_of_position_[p] = color[by_color_[p]];
    color_ = color;
    total_bits_ = n_ * (n_ - 1) / 2;
  }

  std::uint64_t run() {
    placed_.clear();
    search(0, 0);
    return best_;
  }

 private:
  void search(int depth, std::uint64_t code) {
    if (depth == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v : by_color_) {
      if (used_[v] || color_[v] != cell_of_position_[depth]) continue;
      std::uint64_t next = code;
      for (Vertex w : placed_) next = (next << 1) | (g_.has_edge(v, w) ? 1U : 0U);
      const int bits = depth * (depth + 1) / 2;
      if (have_best_ && next > (best_ >> (total_bits_ - bits))) continue;
      used_[v] = 1;
      placed_.push_back(v);
      search(depth + 1, next);
      placed_.pop_back();
      used_[v] = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<char> used_;
  std::vector<Vertex> by_color_;
  std::vector<int> cell_of_position_;
  std::vector<int> color_;
  std::vector<Vertex> placed_;
  int total_bits_ = 0;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

Graph decode(int n, std::uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2 - 1;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

int parse_int(std::string_view s, std::string_view spec) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "' in corpus spec '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

void for_each_connected_labeled(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7) throw InstanceError("labeled enumeration supports 1 <= n <= 7");
  std::vector<Edge> pairs;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  const std::uint32_t limit = 1U << pairs.size();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<int>(__builtin_popcount(mask)) < n - 1) continue;
    std::fill(adj.begin(), adj.end(), 0U);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        adj[pairs[i].u] |= 1U << pairs[i].v;
        adj[pairs[i].v] |= 1U << pairs[i].u;
      }
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if ((frontier >> v) & 1U) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (1U << n) - 1) continue;
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    }
    fn(g);
  }
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.n() > 11) throw InstanceError("canonical code supports n <= 11");
  if (g.n() <= 1) return 0;
  return Canonizer(g).run();
}

std::vector<Graph> graph_classes(int n) {
  if (n < 0 || n > 8) throw InstanceError("isomorphism classes supported for 0 <= n <= 8");
  std::vector<std::uint64_t> codes{0};
  for (int size = 1; size < n; ++size) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t code : codes) {
      const Graph base = decode(size, code);
      for (std::uint32_t nb = 0; nb < (1U << size); ++nb) {
        Graph g(size + 1);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex v = 0; v < size; ++v) {
          if ((nb >> v) & 1U) g.add_edge(v, size);
        }
        next.insert(canonical_code(g));
      }
    }
    codes.assign(next.begin(), next.end());
    std::sort(codes.begin(), codes.end());
  }
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  for (std::uint64_t code : codes) out.push_back(decode(n, code));
  return out;
}

std::vector<Graph> connected_graph_classes(int n) {
  auto all = graph_classes(n);
  std::erase_if(all, [](const Graph& g) { return g.n() == 0 || !is_connected(g); });
  return all;
}

CorpusSpec parse_corpus_spec(std::string_view text) {
  const auto parts = split(text, ':');
  CorpusSpec spec;
  const auto& kind = parts.front();
  if ((kind == "labeled" || kind == "classes") && parts.size() == 2) {
    spec.kind = kind == "labeled" ? CorpusSpec::Kind::Labeled : CorpusSpec::Kind::Classes;
    spec.lo = 2;
    spec.hi = parse_int(parts[1], text);
    const int cap = spec.kind == CorpusSpec::Kind::Labeled ? 7 : 8;
    if (spec.hi < 2 || spec.hi > cap) {
      throw std::invalid_argument(std::string(kind) + " corpus needs 2 <= N <= " + std::to_string(cap));
    }
  } else if (kind == "tight" && parts.size() == 2) {
    spec.kind = CorpusSpec::Kind::Tight;
    const auto dots = parts[1].find("..");
    if (dots == std::string_view::npos) {
      spec.lo = spec.hi = parse_int(parts[1], text);
    } else {
      spec.lo = parse_int(parts[1].substr(0, dots), text);
      spec.hi = parse_int(parts[1].substr(dots + 2), text);
    }
    if (spec.lo < 1 || spec.hi < spec.lo) throw std::invalid_argument("tight corpus needs 1 <= A <= B");
  } else if (kind == "random" && parts.size() == 5) {
    spec.kind = CorpusSpec::Kind::Random;
    spec.count = parse_int(parts[1], text);
    spec.n = parse_int(parts[2], text);
    spec.m = parse_int(parts[3], text);
    std::uint64_t seed = 0;
    const auto s = parts[4];
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad seed in corpus spec");
    spec.seed = seed;
    if (spec.count < 0) throw std::invalid_argument("random corpus needs COUNT >= 0");
  } else {
    throw std::invalid_argument("unknown corpus spec '" + std::string(text) +
                                "' (labeled:N, classes:N, tight:A..B, random:COUNT:N:M:SEED)");
  }
  return spec;
}

void for_each_instance(const CorpusSpec& spec, const std::function<void(long long, const Graph&)>& fn) {
  long long id = 0;
  switch (spec.kind) {
    case CorpusSpec::Kind::Labeled:
      for (int n = spec.lo; n <= spec.hi; ++n) {
        for_each_connected_labeled(n, [&](const Graph& g) { fn(id++, g); });
      }
      break;
    case CorpusSpec::Kind::Classes:
      for (int n = spec.lo; n <= spec.hi; ++n) {
        for (const Graph& g : connected_graph_classes(n)) fn(id++, g);
      }
      break;
    case CorpusSpec::Kind::Tight:
      for (int k = spec.lo; k <= spec.hi; ++k) fn(id++, gen_tight(k));
      break;
    case CorpusSpec::Kind::Random:
      for (int i = 0; i < spec.count; ++i) fn(id++, gen_random(spec.n, spec.m, spec.seed + static_cast<std::uint64_t>(i)));
      break;
  }
}

}  // namespace mist
