#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "brute.hpp"
#include "mist/audit.hpp"
#include "mist/corpus.hpp"
#include "mist/cover.hpp"
#include "mist/errors.hpp"
#include "mist/generators.hpp"
#include "mist/oracle.hpp"

using namespace mist;

TEST_CASE("xorshift64* is reproducible") {
  Xorshift64Star a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Xorshift64Star r(7);
  for (int i = 0; i < 1000; ++i) {
    const int v = r.between(3, 5);
    CHECK(v >= 3);
    CHECK(v <= 5);
  }
}

TEST_CASE("gen_tight") {
  CHECK(gen_tight(1) == fixtures::cycle(4));
  const Graph t2 = gen_tight(2);
  CHECK(t2.n() == 8);
  CHECK(t2.m() == 9);
  CHECK(exact_mist(t2).internal == 6);
  CHECK(cut_edges(t2) == std::vector<Edge>{Edge(3, 4)});
  for (int k = 1; k <= 25; ++k) {
    const Graph g = gen_tight(k);
    CHECK(g.n() == 4 * k);
    CHECK(g.m() == 5 * k - 1);
    CHECK(static_cast<int>(cut_edges(g).size()) == k - 1);
  }
  CHECK_THROWS_AS(gen_tight(0), InstanceError);
}

TEST_CASE("gen_tight ratios climb toward 4/3") {
  for (int k = 2; k < 25; ++k) {
    const auto r = Fraction::reduced(4 * k - 2, 3 * k);
    const auto next = Fraction::reduced(4 * (k + 1) - 2, 3 * (k + 1));
    CHECK(r < next);
    CHECK(next < Fraction{4, 3});
  }
}

TEST_CASE("gen_random") {
  const Graph tree = gen_random(4, 3, 11);
  CHECK(is_tree(tree));
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(gen_random(5, 10, s) == fixtures::complete(5));
  CHECK(gen_random(8, 12, 42) == gen_random(8, 12, 42));
  CHECK(gen_random(8, 12, 42).m() == 12);
  CHECK(is_connected(gen_random(30, 40, 1)));
  CHECK_THROWS_AS(gen_random(5, 3, 1), InstanceError);
  CHECK_THROWS_AS(gen_random(5, 11, 1), InstanceError);
}

TEST_CASE("random trees are roughly uniform over labeled trees on 4 vertices") {
  std::map<std::vector<Edge>, int> seen;
  for (std::uint64_t s = 0; s < 3200; ++s) ++seen[random_tree(4, s).edges()];
  CHECK(seen.size() == 16);
  for (const auto& [edges, count] : seen) {
    CHECK(count > 120);
    CHECK(count < 280);
  }
}

TEST_CASE("isomorphism classes match the known counts") {
  const int all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 0; n <= 8; ++n) {
    CHECK(static_cast<int>(graph_classes(n).size()) == all[n]);
    CHECK(static_cast<int>(connected_graph_classes(n).size()) == connected[n]);
  }
}

TEST_CASE("canonical codes ignore labels") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = gen_random(8, 12, s);
    Xorshift64Star rng(s);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 7; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    Graph h(8);
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    REQUIRE(canonical_code(g) == canonical_code(h));
  }
  CHECK(canonical_code(fixtures::path(4)) != canonical_code(fixtures::star(3)));
}

TEST_CASE("labeled enumeration counts connected graphs") {
  const long long expected[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    std::set<std::vector<Edge>> distinct;
    for_each_connected_labeled(n, [&](const Graph& g) {
      ++count;
      if (n <= 5) distinct.insert(g.edges());
      REQUIRE(brute::component_count(g) == 1);
    });
    CHECK(count == expected[n]);
    if (n <= 5) CHECK(static_cast<long long>(distinct.size()) == count);
  }
}

TEST_CASE("corpus specs") {
  const auto t = parse_corpus_spec("tight:2..25");
  CHECK(t.kind == CorpusSpec::Kind::Tight);
  CHECK(t.lo == 2);
  CHECK(t.hi == 25);
  const auto r = parse_corpus_spec("random:500:10:15:3");
  CHECK(r.count == 500);
  CHECK(r.n == 10);
  CHECK(r.m == 15);
  CHECK(r.seed == 3);
  CHECK(parse_corpus_spec("labeled:7").hi == 7);
  CHECK_THROWS_AS(parse_corpus_spec("labeled:8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec("classes:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec("everything"), std::invalid_argument);
}

TEST_CASE("audit over the tight family without the oracle") {
  AuditOptions exact;
  exact.cover_bound = 100;
  AuditOptions heuristic;
  heuristic.mode = CoverMode::Heuristic;
  for (const auto& options : {exact, heuristic}) {
    const auto records = ratio_audit("tight:2..25", options);
    REQUIRE(records.size() == 24);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const int k = static_cast<int>(i) + 2;
      CHECK(records[i].alg == 3 * k);
      CHECK_FALSE(records[i].oracle.has_value());
      CHECK(records[i].status() == "ok");
    }
  }
  // Default exact bound: k >= 6 has more than 20 vertices.
  const auto capped = summarize(ratio_audit("tight:5..6"));
  CHECK(capped.errors == 1);
}

TEST_CASE("audit with the oracle on small corpora") {
  AuditOptions options;
  options.oracle = true;
  const auto small = summarize(ratio_audit("labeled:5", options));
  CHECK(small.instances == 1 + 4 + 38 + 728);
  CHECK(small.violations == 0);
  CHECK(small.errors == 0);

  const auto random = summarize(ratio_audit("random:500:10:15:1", options));
  CHECK(random.instances == 500);
  CHECK(random.violations == 0);
  REQUIRE(random.max_ratio.has_value());
  CHECK_FALSE(Fraction{4, 3} < *random.max_ratio);

  const auto tight = ratio_audit("tight:2..3", options);
  CHECK(*tight[0].ratio == Fraction{1, 1});
  CHECK(*tight[1].ratio == Fraction{10, 9});
}

TEST_CASE("audit records errors and keeps going") {
  AuditOptions options;
  options.oracle = true;
  const auto records = ratio_audit("tight:3..4", options);  // k = 4 exceeds the oracle bound
  REQUIRE(records.size() == 2);
  CHECK(records[0].status() == "ok");
  CHECK(records[1].status() == "ERROR");
  CHECK(summarize(records).errors == 1);
}

TEST_CASE("audit records round-trip") {
  AuditOptions options;
  options.oracle = true;
  for (const auto& r : ratio_audit("random:20:9:13:5", options)) {
    const auto back = parse_record(serialize_record(r));
    CHECK(serialize_record(back) == serialize_record(r));
  }
  AuditRecord bad;
  bad.id = 3;
  bad.error = "graph is disconnected";
  CHECK(parse_record(serialize_record(bad)).error == bad.error);

  AuditRecord v;
  v.alg = 2;
  v.oracle = 3;
  CHECK(v.violation());
  CHECK(v.status() == "VIOLATION");
}

TEST_CASE("cover serialization round-trips") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = gen_random(10, 14, s);
    const auto h = max_path_cycle_cover(g).cover;
    CHECK(parse_cover(serialize_cover(h), g.n()) == h);
  }
}
