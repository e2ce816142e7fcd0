#include <doctest.h>

#include "brute.hpp"
#include "mist/corpus.hpp"
#include "mist/cover.hpp"
#include "mist/errors.hpp"
#include "mist/generators.hpp"
#include "mist/matching.hpp"
#include "mist/oracle.hpp"

using namespace mist;

namespace {

CoverOptions opts(CoverMode mode, int min_cycle = 4) {
  CoverOptions o;
  o.mode = mode;
  o.min_cycle = min_cycle;
  return o;
}

}  // namespace

TEST_CASE("max_matching on the small examples") {
  CHECK(max_matching(fixtures::complete(3)).size() == 1);
  CHECK(max_matching(fixtures::cycle(4)).size() == 2);
  const auto pet = max_matching(fixtures::petersen());
  CHECK(pet.size() == 5);
  CHECK(is_matching(fixtures::petersen(), pet.edges));
  CHECK(brute::max_matching_size(fixtures::petersen()) == 5);
  CHECK(max_matching(Graph(0)).size() == 0);
}

TEST_CASE("max_matching agrees with exhaustive search") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : graph_classes(n)) {
      const auto m = max_matching(g);
      REQUIRE(is_matching(g, m.edges));
      REQUIRE(m.size() == brute::max_matching_size(g));
    }
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Xorshift64Star rng(seed);
    const int n = rng.between(2, 12);
    const int m = rng.between(n - 1, n * (n - 1) / 2);
    const Graph g = gen_random(n, m, seed);
    REQUIRE(max_matching(g).size() == brute::max_matching_size(g));
  }
}

TEST_CASE("cover components") {
  const auto h = cover_from_edges(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  REQUIRE(h.components.size() == 2);
  CHECK(h.components[0].is_path());
  CHECK(h.components[0].vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(h.components[1].is_cycle());
  CHECK(h.components[1].vertices == std::vector<Vertex>{3, 4, 5});
  CHECK(h.edge_count() == 5);
  CHECK(parse_cover(serialize_cover(h), 6) == h);

  const auto single = cover_from_edges(2, {});
  CHECK(single.components.size() == 2);
  CHECK(single.components[0].is_singleton());
}

TEST_CASE("validate_cover") {
  const Graph c4 = fixtures::cycle(4);
  CHECK(validate_cover(c4, cover_from_edges(4, c4.edges()), 4).valid());

  const Graph k3 = fixtures::complete(3);
  CHECK_FALSE(validate_cover(k3, cover_from_edges(3, k3.edges()), 4).valid());
  CHECK(validate_cover(k3, cover_from_edges(3, k3.edges()), 3).valid());

  const Graph p3 = fixtures::path(3);
  PathCycleCover bad{3, {CoverComponent{CoverComponent::Kind::Path, {0, 2}},
                         CoverComponent{CoverComponent::Kind::Path, {1}}}};
  CHECK_FALSE(validate_cover(p3, bad, 4).valid());

  PathCycleCover missing{3, {CoverComponent{CoverComponent::Kind::Path, {0, 1}}}};
  CHECK_FALSE(validate_cover(p3, missing, 4).valid());
}

TEST_CASE("max_path_cycle_cover on the worked examples") {
  for (auto mode : {CoverMode::Exact, CoverMode::Heuristic}) {
    const auto c4 = max_path_cycle_cover(fixtures::cycle(4), opts(mode));
    CHECK(c4.cover.edge_count() == 4);
    CHECK(c4.cover.components.size() == 1);

    const auto k3 = max_path_cycle_cover(fixtures::complete(3), opts(mode));
    CHECK(k3.cover.edge_count() == 2);
    CHECK(k3.cover.components.front().is_path());

    const auto t2 = max_path_cycle_cover(gen_tight(2), opts(mode));
    CHECK(t2.cover.edge_count() == 8);
    REQUIRE(t2.cover.components.size() == 2);
    CHECK(t2.cover.components[0].is_cycle());
    CHECK(t2.cover.components[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(t2.cover.components[1].vertices == std::vector<Vertex>{4, 5, 6, 7});
  }
  CHECK(brute::degree2_census(gen_tight(2), true).constrained_optima.size() == 1);
  CHECK_THROWS_AS(max_path_cycle_cover(Graph(3)), InstanceError);
  CHECK_THROWS_AS(max_path_cycle_cover(gen_random(21, 30, 1)), InstanceError);
}

TEST_CASE("covers agree with exhaustive search on every connected graph up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      const auto census = brute::degree2_census(g);
      const auto two = max_two_matching(g);
      REQUIRE(static_cast<int>(two.size()) == census.unconstrained);

      const auto exact = max_path_cycle_cover(g, opts(CoverMode::Exact));
      REQUIRE(validate_cover(g, exact.cover, 4).valid());
      REQUIRE(exact.cover.edge_count() == census.constrained);
      REQUIRE(exact.stats.unconstrained_edges == census.unconstrained);

      const auto loose = max_path_cycle_cover(g, opts(CoverMode::Exact, 3));
      REQUIRE(validate_cover(g, loose.cover, 3).valid());
      REQUIRE(loose.cover.edge_count() == census.unconstrained);

      const auto heur = max_path_cycle_cover(g, opts(CoverMode::Heuristic));
      REQUIRE(validate_cover(g, heur.cover, 4).valid());
      REQUIRE(heur.cover.edge_count() >= census.unconstrained - heur.stats.triangles_repaired);
      REQUIRE(heur.cover.edge_count() <= census.constrained);
      if (heur.stats.lossy_repairs == 0) REQUIRE(heur.cover.edge_count() == census.unconstrained);

      const auto paths = exact_max_path_cover(g);
      REQUIRE(paths.edge_count() == census.paths_only);
      REQUIRE(paths.edge_count() <= exact.cover.edge_count());
      REQUIRE(exact.cover.edge_count() <= census.unconstrained);
    }
  }
}

TEST_CASE("exact mode returns the lexicographically smallest optimum") {
  for (const Graph& g : connected_graph_classes(5)) {
    const auto census = brute::degree2_census(g, true);
    auto optima = census.constrained_optima;
    for (auto& o : optima) std::sort(o.begin(), o.end());
    std::sort(optima.begin(), optima.end());
    REQUIRE(max_path_cycle_cover(g).cover.edges() == optima.front());
  }
}

TEST_CASE("cover modes parse") {
  CHECK(parse_cover_mode("exact") == CoverMode::Exact);
  CHECK(parse_cover_mode("heuristic") == CoverMode::Heuristic);
  CHECK_THROWS(parse_cover_mode("fast"));
}
