#pragma once
// Graph corpora for sweeps: every connected labeled graph on n vertices,
// one representative per isomorphism class, and the textual corpus specs
// understood by the audit harness.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

/// Calls fn on every connected labeled graph with exactly n vertices
/// (n <= 7; n = 7 is about 1.87 million graphs).
void for_each_connected_labeled(int n, const std::function<void(const Graph&)>& fn);

/// Canonical 64-bit adjacency code: the lexicographically smallest upper
/// triangle over all relabelings. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One graph per isomorphism class on n vertices (n <= 8), ordered by code.
std::vector<Graph> graph_classes(int n);
std::vector<Graph> connected_graph_classes(int n);

struct CorpusSpec {
  enum class Kind { Labeled, Classes, Tight, Random };
  Kind kind = Kind::Labeled;
  int lo = 2;  // vertex range for Labeled/Classes, k range for Tight
  int hi = 2;
  int count = 0;  // Random only
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
};

/// Grammar:
///   labeled:N            connected labeled graphs, 2 <= n <= N (N <= 7)
///   classes:N            connected isomorphism classes, 2 <= n <= N (N <= 8)
///   tight:A..B           gen_tight(k), A <= k <= B
///   random:COUNT:N:M:SEED  gen_random(N, M, SEED + i), i < COUNT
/// Throws std::invalid_argument on malformed specs.
CorpusSpec parse_corpus_spec(std::string_view text);

/// Streams (instance index, graph) in a fixed order.
void for_each_instance(const CorpusSpec& spec, const std::function<void(long long, const Graph&)>& fn);

}  // namespace mist
