#pragma once
// Rewrites a maximum triangle-free path-cycle cover of a reduced graph into
// the normal form the assembler needs, without changing its edge count:
//   (a) no path endpoint is adjacent to a cycle vertex;
//   (b) every singleton is adjacent to an inner vertex of some path;
//   (c) every path of length 1..3 has an endpoint adjacent to an inner
//       vertex of a path of length >= 4.

#include <string>
#include <vector>

#include "mist/cover.hpp"
#include "mist/graph.hpp"

namespace mist {

struct ReconstructOptions {
  /// After every rewrite, re-validate the cover and probe for an edge that
  /// joins two path endpoints; finding one means the input was not maximum
  /// and throws InvariantViolation.
  bool maximality_guard = false;
};

struct ReconstructResult {
  PathCycleCover cover;
  int steps = 0;
  int cycle_merges = 0;     // path endpoint + cycle -> one path
  int endpoint_swaps = 0;   // re-threading a 2- or 3-path to expose an endpoint
  int short_merges = 0;     // 1-path + 2-path -> 3-path + singleton
  int long_merges = 0;      // short + short -> path of length >= 4 + singleton
  bool normal_form = false;
  /// Conditions still unmet when no rewrite applies (empty when normal_form).
  std::vector<std::string> unresolved;
};

/// Preconditions: g1 connected, reduced and not a tree; h a valid cover of
/// g1 with cycles of length >= 4 and at least two components. Throws
/// InstanceError otherwise.
ReconstructResult reconstruct(const Graph& g1, const PathCycleCover& h,
                              const ReconstructOptions& options = {});

/// Which of (a), (b), (c) fail, one message per offending component.
std::vector<std::string> normal_form_violations(const Graph& g1, const PathCycleCover& h);

bool check_reconstructed(const Graph& g1, const PathCycleCover& h);

}  // namespace mist
