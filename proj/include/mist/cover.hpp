#pragma once
// Path-cycle covers: spanning subgraphs with every degree at most two.
// The pipeline wants one of maximum size whose cycles all have at least
// four edges.

#include <string>
#include <string_view>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

struct CoverComponent {
  enum class Kind { Path, Cycle };
  Kind kind = Kind::Path;
  /// Path: vertices in order, possibly one. Cycle: vertices in cyclic order,
  /// closing edge back to the front implied.
  std::vector<Vertex> vertices;

  bool is_path() const { return kind == Kind::Path; }
  bool is_cycle() const { return kind == Kind::Cycle; }
  bool is_singleton() const { return is_path() && vertices.size() == 1; }
  int edge_count() const {
    const int k = static_cast<int>(vertices.size());
    return is_cycle() ? k : k - 1;
  }
  /// Path endpoints (one entry for a singleton). Empty for cycles.
  std::vector<Vertex> endpoints() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const CoverComponent&, const CoverComponent&) = default;
};

struct PathCycleCover {
  int n = 0;
  std::vector<CoverComponent> components;

  int edge_count() const;
  std::vector<Edge> edges() const;  // ascending

  friend bool operator==(const PathCycleCover&, const PathCycleCover&) = default;
};

/// Decomposes a degree-<=2 edge set into components in canonical form:
/// components ordered by smallest vertex, paths read from their smaller
/// endpoint, cycles from their smallest vertex toward its smaller neighbor.
PathCycleCover cover_from_edges(int n, const std::vector<Edge>& edges);

struct CoverReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks partition, host-edge membership, degree <= 2 and the cycle-length
/// floor. Violations come back as data.
CoverReport validate_cover(const Graph& g, const PathCycleCover& h, int min_cycle);

/// Maximum 2-matching (no cycle-length restriction) via the vertex-splitting
/// gadget and max_matching. Edges ascending.
std::vector<Edge> max_two_matching(const Graph& g);

enum class CoverMode { Exact, Heuristic };

std::string_view to_string(CoverMode mode);
CoverMode parse_cover_mode(std::string_view text);

struct CoverOptions {
  CoverMode mode = CoverMode::Exact;
  int min_cycle = 4;     // 3 = unrestricted, 4 = triangle-free
  int exact_bound = 20;  // exact mode refuses larger graphs
};

struct CoverStats {
  int unconstrained_edges = 0;  // size of a maximum 2-matching
  int triangles_repaired = 0;   // heuristic mode only
  int lossy_repairs = 0;        // repairs that had to drop an edge
  long long search_nodes = 0;   // exact mode only
};

struct CoverResult {
  PathCycleCover cover;
  CoverStats stats;
};

/// Maximum path-cycle cover with every cycle of at least `min_cycle` edges.
/// Exact mode returns the lexicographically smallest optimal edge set;
/// heuristic mode repairs triangles of a maximum 2-matching.
/// Throws InstanceError on disconnected input or when exact mode's size
/// bound is exceeded.
CoverResult max_path_cycle_cover(const Graph& g, const CoverOptions& options = {});

/// "P v1 v2 ..." / "C v1 v2 ..." lines, 1-based.
std::string serialize_cover(const PathCycleCover& h);
PathCycleCover parse_cover(std::string_view text, int n);

}  // namespace mist
