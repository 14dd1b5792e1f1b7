#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "ckstar/error.hpp"

#include <random>

using namespace ckstar;
using namespace support;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges, bool no_sources) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < vertices; ++v) names.push_back("v" + std::to_string(v));
  std::vector<EdgeSpec> specs;
  for (std::size_t e = 0; e < edges; ++e) {
    const std::size_t r = no_sources && e < vertices ? e : rng() % vertices;
    specs.push_back({"e" + std::to_string(e), names[r], names[rng() % vertices]});
  }
  return Graph(names, specs);
}

/// Reachability by boolean matrix closure.
bool transitive_by_closure(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (EdgeId e = 0; e < g.edge_count(); ++e) reach[g.source(e)][g.range(e)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !reach[i][j]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(o2().graph()).valid());
  CHECK(validate(c2().graph()).valid());
  const OrderedGraph sourced = parse_graph(R"({"vertices": ["u", "w", "z"],
      "edges": [{"id": "e", "range": "u", "source": "w"}, {"id": "l", "range": "w", "source": "w"}]})");
  const ValidationReport r = validate(sourced.graph());
  CHECK_FALSE(r.valid());
  CHECK(r.sourceless == std::vector<VertexId>{2});
  CHECK(r.isolated == std::vector<VertexId>{2});
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(Graph({"v", "v"}, {}), Error);
  try {
    Graph({"v"}, {{"a", "v", "nowhere"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_graph);
  }
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["v"], "edges": [{"id": "a", "range": "v"}]})"), Error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["v"], "edges": [{"id": "a", "range": "v", "source": "v"},
      {"id": "b", "range": "v", "source": "v"}], "order": ["a"]})"),
                  Error);
}

TEST_CASE("every loop has an entrance") {
  CHECK_FALSE(every_loop_has_entrance(load("loop1.json").graph()));
  CHECK_FALSE(every_loop_has_entrance(c2().graph()));
  CHECK_FALSE(every_loop_has_entrance(load("loop3.json").graph()));
  CHECK(every_loop_has_entrance(o2().graph()));
  CHECK(every_loop_has_entrance(entrance().graph()));
}

TEST_CASE("entrance criterion agrees with loop enumeration on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t vertices = 1 + rng() % 4;
    const Graph g = random_graph(rng, vertices, vertices + rng() % (9 - vertices), true);
    CHECK(every_loop_has_entrance(g) == oracle::every_loop_has_entrance(g));
  }
}

TEST_CASE("has_loop") {
  CHECK(has_loop(o2().graph()));
  CHECK(has_loop(c2().graph()));
  const OrderedGraph line = parse_graph(R"({"vertices": ["u", "w"],
      "edges": [{"id": "e", "range": "u", "source": "w"}]})");
  CHECK_FALSE(has_loop(line.graph()));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t vertices = 1 + rng() % 5;
    const Graph g = random_graph(rng, vertices, vertices + rng() % 4, true);
    REQUIRE(validate(g).sourceless.empty());
    CHECK(has_loop(g));
  }
}

TEST_CASE("is_transitive") {
  CHECK(is_transitive(o2().graph()));
  CHECK(is_transitive(c2().graph()));
  const OrderedGraph two_loops = parse_graph(R"({"vertices": ["u", "w"],
      "edges": [{"id": "a", "range": "u", "source": "u"}, {"id": "b", "range": "w", "source": "w"}]})");
  CHECK_FALSE(is_transitive(two_loops.graph()));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t vertices = 1 + rng() % 5;
    const Graph g = random_graph(rng, vertices, rng() % 9, false);
    CHECK(is_transitive(g) == transitive_by_closure(g));
  }
}

TEST_CASE("validate_order") {
  CHECK(validate_order(o2()).valid());
  CHECK(validate_order(c2()).valid());
  const OrderedGraph interleaved = parse_graph(R"({"vertices": ["u", "w"],
      "edges": [{"id": "a", "range": "u", "source": "u"}, {"id": "b", "range": "w", "source": "u"},
                {"id": "c", "range": "u", "source": "w"}, {"id": "d", "range": "w", "source": "w"}],
      "order": ["a", "b", "c", "d"]})");
  const ValidationReport r = validate_order(interleaved);
  CHECK_FALSE(r.valid());
  CHECK(r.order_violations == std::vector<VertexId>{0, 1});
}

TEST_CASE("simple loops match brute-force enumeration") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t vertices = 1 + rng() % 4;
    const Graph g = random_graph(rng, vertices, vertices + rng() % (9 - vertices), true);
    // Each simple loop appears once per rotation in the brute-force list.
    std::size_t rotations = 0;
    for (const auto& loop : simple_loops(g)) rotations += loop.size();
    CHECK(rotations == oracle::closed_simple_words(g).size());
  }
  CHECK(max_simple_loop_length(entrance().graph()) == 2);
  CHECK(max_simple_loop_length(load("loop3.json").graph()) == 3);
}

TEST_CASE("shortest_path") {
  const Graph& g = entrance().graph();
  const auto p = shortest_path(g, g.vertex("u"), g.vertex("w"));
  REQUIRE(p.has_value());
  CHECK(*p == g.word({"f"}));
  CHECK(shortest_path(g, g.vertex("u"), g.vertex("u"))->empty());
}
