#include "mist/reconstructor.hpp"

#include <algorithm>
#include <optional>

#include "mist/reducer.hpp"

namespace mist {

namespace {

// Index of every vertex's component and its position inside it.
struct Layout {
  std::vector<int> owner;
  std::vector<int> position;

  Layout(int n, const std::vector<CoverComponent>& comps)
      : owner(static_cast<std::size_t>(n), -1), position(static_cast<std::size_t>(n), -1) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& vs = comps[i].vertices;
      for (std::size_t j = 0; j < vs.size(); ++j) {
        owner[vs[j]] = static_cast<int>(i);
        position[vs[j]] = static_cast<int>(j);
      }
    }
  }
};

bool is_inner(const std::vector<CoverComponent>& comps, const Layout& at, Vertex v) {
  const auto& c = comps[at.owner[v]];
  const int pos = at.position[v];
  return c.is_path() && pos > 0 && pos + 1 < static_cast<int>(c.vertices.size());
}

bool adjacent_outside(const Graph& g, const Layout& at, int comp, Vertex v) {
  for (Vertex w : g.neighbors(v)) {
    if (at.owner[w] != comp) return true;
  }
  return false;
}

std::vector<Vertex> sorted_endpoints(const CoverComponent& c) {
  auto ends = c.endpoints();
  std::sort(ends.begin(), ends.end());
  return ends;
}

// Path vertices read so that `first` comes first.
std::vector<Vertex> oriented_from(const CoverComponent& path, Vertex first) {
  auto vs = path.vertices;
  if (vs.front() != first) std::reverse(vs.begin(), vs.end());
  return vs;
}

CoverComponent make_path(std::vector<Vertex> vs) {
  return CoverComponent{CoverComponent::Kind::Path, std::move(vs)};
}

class Rewriter {
 public:
  Rewriter(const Graph& g, PathCycleCover cover, const ReconstructOptions& options)
      : g_(g), comps_(std::move(cover.components)), options_(options),
        edge_total_(PathCycleCover{g.n(), comps_}.edge_count()) {}

  ReconstructResult run() {
    ReconstructResult result;
    const int step_limit = 3 * g_.n();
    while (true) {
      check_no_leafy_three_paths();
      if (merge_path_into_cycle()) {
        ++result.cycle_merges;
      } else if (swap_endpoint()) {
        ++result.endpoint_swaps;
      } else if (merge_short_pair(/*long_result=*/false)) {
        ++result.short_merges;
      } else if (merge_short_pair(/*long_result=*/true)) {
        ++result.long_merges;
      } else {
        break;
      }
      ++result.steps;
      if (result.steps > step_limit) {
        throw InvariantViolation("reconstruction exceeded " + std::to_string(step_limit) + " rewrites");
      }
      after_rewrite();
    }
    result.cover = PathCycleCover{g_.n(), std::move(comps_)};
    result.unresolved = normal_form_violations(g_, result.cover);
    result.normal_form = result.unresolved.empty();
    return result;
  }

 private:
  // A 3-path whose ends are both leaves of a reduced graph cannot occur.
  void check_no_leafy_three_paths() const {
    for (const auto& c : comps_) {
      if (c.is_path() && c.vertices.size() == 4 && g_.is_leaf(c.vertices.front()) &&
          g_.is_leaf(c.vertices.back())) {
        throw InvariantViolation("3-path with both endpoints leaves in a reduced graph");
      }
    }
  }

  void after_rewrite() {
    const PathCycleCover current{g_.n(), comps_};
    if (current.edge_count() != edge_total_) {
      throw InvariantViolation("rewrite changed the cover's edge count");
    }
    if (!options_.maximality_guard) return;
    const auto report = validate_cover(g_, current, 4);
    if (!report.valid()) throw InvariantViolation("rewrite broke the cover: " + report.violations.front());
    const Layout at(g_.n(), comps_);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      for (Vertex u : comps_[i].endpoints()) {
        for (Vertex w : g_.neighbors(u)) {
          const int k = at.owner[w];
          if (k == static_cast<int>(i) || !comps_[k].is_path()) continue;
          const auto ends = comps_[k].endpoints();
          if (std::find(ends.begin(), ends.end(), w) != ends.end()) {
            throw InvariantViolation("cover is not maximum: edge " + std::to_string(u + 1) + "-" +
                                     std::to_string(w + 1) + " joins two paths");
          }
        }
      }
    }
  }

  // A path endpoint adjacent to a cycle vertex absorbs the cycle.
  bool merge_path_into_cycle() {
    const Layout at(g_.n(), comps_);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (!comps_[i].is_path()) continue;
      for (Vertex u : sorted_endpoints(comps_[i])) {
        for (Vertex w : g_.neighbors(u)) {
          const int k = at.owner[w];
          if (!comps_[k].is_cycle()) continue;
          auto path = oriented_from(comps_[i], u);
          std::reverse(path.begin(), path.end());  // u last

          const auto& cyc = comps_[k].vertices;
          const int len = static_cast<int>(cyc.size());
          const int j = at.position[w];
          const Vertex before = cyc[(j + len - 1) % len];
          const Vertex after = cyc[(j + 1) % len];
          // Drop the smaller cycle edge at w and walk away from it.
          const int step = Edge(w, before) < Edge(w, after) ? 1 : -1;
          for (int t = 0; t < len; ++t) path.push_back(cyc[((j + step * t) % len + len) % len]);

          comps_[i] = make_path(std::move(path));
          comps_.erase(comps_.begin() + k);
          return true;
        }
      }
    }
    return false;
  }

  // Re-threads a 2- or 3-path with no endpoint adjacent outside so that one
  // of its endpoints is.
  bool swap_endpoint() {
    const Layout at(g_.n(), comps_);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      const auto& c = comps_[i];
      const int comp = static_cast<int>(i);
      if (!c.is_path() || c.vertices.size() < 3 || c.vertices.size() > 4) continue;
      if (adjacent_outside(g_, at, comp, c.vertices.front()) ||
          adjacent_outside(g_, at, comp, c.vertices.back())) {
        continue;
      }
      std::vector<Vertex> vs = c.vertices;
      std::optional<std::vector<Vertex>> rewritten;
      if (vs.size() == 3) {
        // v1 v2 v3 with v1~v3: v3 v1 v2 exposes v2.
        if (g_.has_edge(vs[0], vs[2]) && adjacent_outside(g_, at, comp, vs[1])) {
          rewritten = std::vector<Vertex>{vs[2], vs[0], vs[1]};
        }
      } else {
        // u1 u2 u3 u4 with u4 a leaf and u1~u3: u2 u1 u3 u4 exposes u2.
        if (!g_.is_leaf(vs[3]) && g_.is_leaf(vs[0])) std::reverse(vs.begin(), vs.end());
        if (g_.is_leaf(vs[3]) && g_.has_edge(vs[0], vs[2]) && adjacent_outside(g_, at, comp, vs[1])) {
          rewritten = std::vector<Vertex>{vs[1], vs[0], vs[2], vs[3]};
        }
      }
      if (rewritten) {
        comps_[i] = make_path(std::move(*rewritten));
        return true;
      }
    }
    return false;
  }

  // Short path p with an endpoint adjacent to an inner vertex of a 2- or
  // 3-path q: q's near end becomes a singleton and the rest of q is spliced
  // onto p. With long_result == false this is the 1-path + 2-path case,
  // which additionally needs q's far end adjacent outside q; otherwise the
  // combined length must reach four.
  bool merge_short_pair(bool long_result) {
    const Layout at(g_.n(), comps_);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      const auto& p = comps_[i];
      const int plen = p.edge_count();
      if (!p.is_path() || plen < 1 || plen > 3) continue;
      if (!long_result && plen != 1) continue;
      for (Vertex u : sorted_endpoints(p)) {
        for (Vertex w : g_.neighbors(u)) {
          const int k = at.owner[w];
          if (k == static_cast<int>(i) || !is_inner(comps_, at, w)) continue;
          const auto& q = comps_[k];
          const int qlen = q.edge_count();
          if (qlen < 2 || qlen > 3) continue;
          if (long_result ? plen + qlen < 4 : qlen != 2) continue;

          std::vector<Vertex> qs = q.vertices;
          if (long_result) {
            if (qs[1] != w) std::reverse(qs.begin(), qs.end());
          } else {
            // Keep as far end the first endpoint (ascending) adjacent outside q.
            std::optional<Vertex> far;
            for (Vertex e : sorted_endpoints(q)) {
              if (adjacent_outside(g_, at, k, e)) {
                far = e;
                break;
              }
            }
            if (!far) continue;
            if (qs.back() != *far) std::reverse(qs.begin(), qs.end());
          }
          const Vertex lone = qs.front();
          std::vector<Vertex> merged(qs.rbegin(), qs.rend() - 1);  // far end .. w
          for (Vertex x : oriented_from(p, u)) merged.push_back(x);

          comps_[i] = make_path(std::move(merged));
          comps_[k] = make_path({lone});
          return true;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<CoverComponent> comps_;
  ReconstructOptions options_;
  int edge_total_;
};

}  // namespace

std::vector<std::string> normal_form_violations(const Graph& g1, const PathCycleCover& h) {
  std::vector<std::string> out;
  const Layout at(g1.n(), h.components);
  const auto& comps = h.components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (!c.is_path()) continue;
    const std::string name = "path " + std::to_string(i);
    const auto ends = c.endpoints();

    for (Vertex u : ends) {
      for (Vertex w : g1.neighbors(u)) {
        if (comps[at.owner[w]].is_cycle()) {
          out.push_back(name + ": endpoint " + std::to_string(u + 1) + " adjacent to cycle vertex " +
                        std::to_string(w + 1));
        }
      }
    }

    const int len = c.edge_count();
    if (len == 0) {
      const auto nbrs = g1.neighbors(ends.front());
      const bool ok = std::any_of(nbrs.begin(), nbrs.end(),
                                  [&](Vertex w) { return is_inner(comps, at, w); });
      if (!ok) out.push_back(name + ": singleton not adjacent to an inner path vertex");
    } else if (len <= 3) {
      bool ok = false;
      for (Vertex u : ends) {
        for (Vertex w : g1.neighbors(u)) {
          if (is_inner(comps, at, w) && comps[at.owner[w]].edge_count() >= 4) ok = true;
        }
      }
      if (!ok) out.push_back(name + ": no endpoint adjacent to an inner vertex of a path of length >= 4");
    }
  }
  return out;
}

bool check_reconstructed(const Graph& g1, const PathCycleCover& h) {
  return normal_form_violations(g1, h).empty();
}

ReconstructResult reconstruct(const Graph& g1, const PathCycleCover& h,
                              const ReconstructOptions& options) {
  if (g1.n() == 0 || !is_connected(g1)) throw InstanceError("graph is disconnected");
  if (is_tree(g1)) throw InstanceError("graph is a tree");
  if (!is_reduced(g1)) throw InstanceError("graph is not reduced");
  const auto report = validate_cover(g1, h, 4);
  if (!report.valid()) throw InstanceError("invalid cover: " + report.violations.front());
  if (h.components.size() < 2) throw InstanceError("cover has a single component");
  return Rewriter(g1, h, options).run();
}

}  // namespace mist
