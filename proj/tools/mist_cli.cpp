// mist: command-line front end for the MIST approximation pipeline.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mist/assembler.hpp"
#include "mist/audit.hpp"
#include "mist/cover.hpp"
#include "mist/errors.hpp"
#include "mist/generators.hpp"
#include "mist/oracle.hpp"
#include "mist/reducer.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInstance = 2, kInvariant = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mist::InstanceError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mist::Graph load_graph(const std::string& path) { return mist::parse_graph(read_file(path)); }

int cmd_reduce(const std::string& in) {
  const auto g = load_graph(in);
  const auto r = mist::reduce(g);
  std::cout << "c original_n " << g.n() << '\n';
  const auto kept = r.trace.surviving_vertices();
  for (std::size_t i = 0; i < kept.size(); ++i) std::cout << "c vertex " << i + 1 << ' ' << kept[i] + 1 << '\n';
  std::cout << mist::serialize_graph(r.graph) << mist::serialize_trace(r.trace);
  return kOk;
}

int cmd_cover(const std::string& in, const std::string& mode, int min_cycle, int cover_bound) {
  const auto g = load_graph(in);
  mist::CoverOptions options;
  options.mode = mist::parse_cover_mode(mode);
  options.min_cycle = min_cycle;
  options.exact_bound = cover_bound;
  const auto result = mist::max_path_cycle_cover(g, options);
  std::cout << mist::serialize_cover(result.cover) << "edges=" << result.cover.edge_count()
            << " mode=" << mist::to_string(options.mode) << " lossy_repairs=" << result.stats.lossy_repairs << '\n';
  return kOk;
}

int cmd_solve(const std::string& in, const std::string& mode, int cover_bound, const std::string& stats_path,
              bool guard) {
  const auto g = load_graph(in);
  mist::ApproxOptions options;
  options.cover.mode = mist::parse_cover_mode(mode);
  options.cover.exact_bound = cover_bound;
  options.maximality_guard = guard;
  const auto result = mist::approx_mist(g, options);
  const auto stats = mist::serialize_stats(result.stats);
  std::cout << mist::serialize_tree(result.tree) << stats;
  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) throw mist::InstanceError("cannot write '" + stats_path + "'");
    out << stats;
  }
  if (options.cover.mode == mist::CoverMode::Exact && !result.stats.guarantee_ok) {
    std::cerr << "error: 3/4 guarantee failed on this instance\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_exact(const std::string& in, int bound) {
  const auto g = load_graph(in);
  const auto result = mist::exact_mist(g, bound);
  std::cout << mist::serialize_tree(result.tree) << "n=" << g.n() << "\nm=" << g.m()
            << "\nmode=exact-oracle\ninternal=" << result.internal << '\n';
  return kOk;
}

int cmd_check(const std::string& graph_path, const std::string& tree_path) {
  const auto g = load_graph(graph_path);
  const auto edges = mist::parse_tree_edges(read_file(tree_path));
  const auto problems = mist::tree_problems(g, edges);
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << "invalid: " << p << '\n';
    return kInstance;
  }
  const auto internal = mist::internal_vertices(g, mist::SpanningTree(g.n(), edges));
  std::cout << "valid=1\ninternal=" << internal.count << '\n';
  return kOk;
}

int cmd_audit(const std::string& corpus, bool oracle, const std::string& mode, int bound, int cover_bound) {
  mist::AuditOptions options;
  options.oracle = oracle;
  options.mode = mist::parse_cover_mode(mode);
  options.oracle_bound = bound;
  options.cover_bound = cover_bound;
  const auto spec = mist::parse_corpus_spec(corpus);
  const auto summary = mist::ratio_audit(spec, options, [](const mist::AuditRecord& r) {
    std::cout << mist::serialize_record(r) << '\n';
  });
  std::cout << mist::serialize_summary(summary) << '\n';
  if (summary.violations > 0) return kInvariant;
  return summary.errors > 0 ? kInstance : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum internal spanning tree: 4/3-approximation and exact oracles"};
  app.require_subcommand(1);

  std::string in, mode = "exact", stats_path, graph_path, tree_path, corpus;
  int min_cycle = 4, bound = 12, cover_bound = 20, k = 0, n = 0, m = 0;
  std::uint64_t seed = 0;
  bool oracle = false, guard = false;
  const auto modes = CLI::IsMember({"exact", "heuristic"});

  auto* reduce = app.add_subcommand("reduce", "Apply the safe reductions; print reduced graph and trace");
  reduce->add_option("input", in, "Graph file")->required();

  auto* cover = app.add_subcommand("cover", "Maximum path-cycle cover");
  cover->add_option("input", in, "Graph file")->required();
  cover->add_option("--mode", mode, "exact or heuristic")->check(modes);
  cover->add_option("--min-cycle", min_cycle, "Shortest allowed cycle (3 or 4)")->check(CLI::IsMember({3, 4}));
  cover->add_option("--cover-bound", cover_bound, "Exact mode refuses graphs with more vertices")
      ->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Approximate a maximum internal spanning tree");
  solve->add_option("input", in, "Graph file")->required();
  solve->add_option("--mode", mode, "Cover mode: exact or heuristic")->check(modes);
  solve->add_option("--cover-bound", cover_bound, "Exact cover mode refuses graphs with more vertices")
      ->check(CLI::PositiveNumber);
  solve->add_option("--stats", stats_path, "Also write the stats block here");
  solve->add_flag("--maximality-guard", guard, "Re-validate the cover after every rewrite");

  auto* exact = app.add_subcommand("exact", "Exact maximum internal spanning tree (small graphs)");
  exact->add_option("input", in, "Graph file")->required();
  exact->add_option("--bound", bound, "Refuse graphs with more vertices")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Validate a spanning tree and count its internal vertices");
  check->add_option("--graph", graph_path, "Graph file")->required();
  check->add_option("--tree", tree_path, "Tree file with 't u v' lines")->required();

  auto* gen = app.add_subcommand("gen", "Generate graphs");
  gen->require_subcommand(1);
  auto* tight = gen->add_subcommand("tight", "k chained squares");
  tight->add_option("--k", k, "Number of squares")->required();
  auto* random = gen->add_subcommand("random", "Random connected graph");
  random->add_option("--n", n, "Vertices")->required();
  random->add_option("--m", m, "Edges")->required();
  random->add_option("--seed", seed, "Seed")->required();

  auto* audit = app.add_subcommand("audit", "Ratio audit over a corpus");
  audit->add_option("--corpus", corpus, "labeled:N | classes:N | tight:A..B | random:COUNT:N:M:SEED")->required();
  audit->add_flag("--oracle", oracle, "Compare against the exact oracle");
  audit->add_option("--mode", mode, "Cover mode")->check(modes);
  audit->add_option("--bound", bound, "Oracle size bound")->check(CLI::PositiveNumber);
  audit->add_option("--cover-bound", cover_bound, "Exact cover size bound")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(in);
    if (*cover) return cmd_cover(in, mode, min_cycle, cover_bound);
    if (*solve) return cmd_solve(in, mode, cover_bound, stats_path, guard);
    if (*exact) return cmd_exact(in, bound);
    if (*check) return cmd_check(graph_path, tree_path);
    if (*tight) {
      std::cout << mist::serialize_graph(mist::gen_tight(k));
      return kOk;
    }
    if (*random) {
      std::cout << mist::serialize_graph(mist::gen_random(n, m, seed));
      return kOk;
    }
    if (*audit) return cmd_audit(corpus, oracle, mode, bound, cover_bound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const mist::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInstance;
  } catch (const mist::InstanceError& e) {
    std::cerr << "instance error: " << e.what() << '\n';
    return kInstance;
  } catch (const mist::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
