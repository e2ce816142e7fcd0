#include "mist/generators.hpp"

#include <queue>
#include <string>

#include "mist/errors.hpp"

namespace mist {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void add_pruefer_tree(Graph& g, Xorshift64Star& rng) {
  const int n = g.n();
  if (n < 2) return;
  if (n == 2) {
    g.add_edge(0, 1);
    return;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int& c : code) {
    c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    ++degree[c];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  g.add_edge(a, leaves.top());
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

int Xorshift64Star::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Graph gen_tight(int k) {
  if (k < 1) throw InstanceError("gen_tight needs k >= 1, got " + std::to_string(k));
  Graph g(4 * k);
  for (int i = 0; i < k; ++i) {
    const Vertex a = 4 * i, b = a + 1, c = a + 2, d = a + 3;
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(d, a);
    if (i + 1 < k) g.add_edge(d, a + 4);
  }
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InstanceError("random tree needs n >= 1");
  Graph g(n);
  Xorshift64Star rng(seed);
  add_pruefer_tree(g, rng);
  return g;
}

Graph gen_random(int n, int m, std::uint64_t seed) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_m) {
    throw InstanceError("infeasible (n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  Graph g(n);
  Xorshift64Star rng(seed);
  add_pruefer_tree(g, rng);

  std::vector<Edge> spare;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) spare.emplace_back(u, v);
    }
  }
  const int extra = m - (n - 1);
  for (int i = 0; i < extra; ++i) {
    const auto j = i + static_cast<int>(rng.below(spare.size() - static_cast<std::size_t>(i)));
    std::swap(spare[i], spare[j]);
    g.add_edge(spare[i].u, spare[i].v);
  }
  return g;
}

}  // namespace mist
