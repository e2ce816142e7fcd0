#pragma once
// Turns a normal-form cover of a reduced graph into a spanning forest whose
// every tree has at least 3/4 as many internal vertices as the cover edges
// that join it, links the forest into a spanning tree, and runs the whole
// pipeline (reduce, cover, reconstruct, assemble, link, restore).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mist/cover.hpp"
#include "mist/graph.hpp"
#include "mist/reconstructor.hpp"
#include "mist/reducer.hpp"
#include "mist/tree.hpp"

namespace mist {

struct ForestTree {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<int> components;  // cover components joining this tree
  int ledger_edges = 0;         // their total edge count
  int internal = 0;             // vertices of forest degree >= 2

  /// 4 * internal - 3 * ledger_edges; the tree is 3/4-approximate iff >= 0.
  int alpha_margin() const { return 4 * internal - 3 * ledger_edges; }
  bool alpha_ok() const { return alpha_margin() >= 0; }
};

struct AttachStep {
  enum class Kind { LongPath, ShortPath, Singleton, CycleToTree, CyclePair, Fallback };
  Kind kind = Kind::LongPath;
  std::vector<int> components;
  int tree = -1;
  int internal = 0;  // tree totals right after this step
  int ledger_edges = 0;
  bool alpha_ok = true;
};

struct JoinForest {
  int n = 0;
  std::vector<ForestTree> trees;
  std::vector<AttachStep> log;
  /// Steps that had to leave the standard attachment rules (heuristic
  /// covers, or covers not in normal form).
  int fallbacks = 0;

  int alpha_violations() const;
};

/// Assembly order: paths of length >= 4 seed trees; paths of length 3, 2, 1
/// attach by an endpoint; singletons attach to an internal tree vertex;
/// cycles attach to a tree or pair up with another cycle. Ties go to the
/// lexicographically smallest (component vertex, target) edge.
JoinForest assemble_forest(const Graph& g1, const PathCycleCover& h);

/// Problems with the forest as a join forest of h; empty when consistent.
std::vector<std::string> forest_problems(const Graph& g1, const PathCycleCover& h,
                                         const JoinForest& f);

/// Connects the forest's trees breadth-first over crossing edges.
SpanningTree link_forest(const Graph& g1, const JoinForest& f);

enum class ShortCircuit { None, Tree, HamiltonianPath, SingleCycle };
std::string_view to_string(ShortCircuit s);

struct ApproxOptions {
  CoverOptions cover;
  bool maximality_guard = false;
};

struct ApproxStats {
  int n = 0;
  int m = 0;
  int reduced_n = 0;
  int reduced_m = 0;
  int trace_steps = 0;
  CoverMode mode = CoverMode::Exact;
  int cover_edges = 0;
  int unconstrained_edges = 0;
  int triangles_repaired = 0;
  int lossy_repairs = 0;
  ShortCircuit short_circuit = ShortCircuit::None;
  int reconstruct_steps = 0;
  bool normal_form = true;
  int forest_trees = 0;
  int alpha_violations = 0;
  int fallbacks = 0;
  std::vector<int> alpha_margins;
  std::vector<bool> tree_alpha_ok;
  int internal = 0;
  /// Short-circuited (optimal by construction), or the forest was
  /// 3/4-approximate and 4 * internal >= 3 * cover_edges.
  bool guarantee_ok = true;
};

struct ApproxResult {
  SpanningTree tree;
  ApproxStats stats;
  JoinForest forest;  // empty when short-circuited
};

/// End-to-end approximation. Throws InstanceError for n < 2 or a
/// disconnected graph.
ApproxResult approx_mist(const Graph& g, const ApproxOptions& options = {});

/// Flat "key=value" lines.
std::string serialize_stats(const ApproxStats& stats);
std::map<std::string, std::string> parse_key_values(std::string_view text);

}  // namespace mist
