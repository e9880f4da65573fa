#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gspline/io/documents.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

using namespace gspline;
using namespace gspline::io;
using fixtures::l;

namespace {

std::set<std::vector<std::size_t>> sequences(const std::vector<Trail<Integer>>& trails) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& t : trails) out.insert(t.edges);
  return out;
}

std::set<std::set<std::size_t>> edge_sets(const std::vector<Trail<Integer>>& trails) {
  std::set<std::set<std::size_t>> out;
  for (const auto& t : trails) out.insert(std::set<std::size_t>(t.edges.begin(), t.edges.end()));
  return out;
}

}  // namespace

TEST_CASE("graph construction rejects malformed edges") {
  LabeledGraph<Integer> g(3);
  g.add_edge(0, 1, 4);
  CHECK_THROWS_AS(g.add_edge(0, 0, 2), input_error);
  CHECK_THROWS_AS(g.add_edge(0, 3, 2), input_error);
  CHECK_THROWS_AS(g.add_edge(1, 2, 0), input_error);
  CHECK_THROWS_AS(g.add_edge(1, 0, 7), input_error);
  CHECK(g.edge_count() == 1);
  CHECK(g.find_edge(1, 0) == std::optional<std::size_t>(0));
  CHECK_FALSE(g.find_edge(1, 2));
}

TEST_CASE("graph documents load and round-trip") {
  const json doc = read_json_file(std::filesystem::path(GSPLINE_DATA_DIR) / "diamond.json");
  const auto g = load_graph<Integer>(doc);
  CHECK(g == fixtures::diamond());
  CHECK(load_graph<Integer>(graph_to_json(graph_document(g))) == g);

  const auto p = fixtures::poly_triangle();
  CHECK(load_graph<Polynomial>(graph_to_json(graph_document(p))) == p);
}

TEST_CASE("graph documents report bad input") {
  const json good = graph_to_json(graph_document(fixtures::diamond()));
  CHECK_THROWS_AS(load_graph<Polynomial>(good), input_error);

  json bad = good;
  bad["domain"] = "rational";
  CHECK_THROWS_AS(load_graph<Integer>(bad), input_error);

  bad = good;
  bad["edges"][0]["v"] = "v9";
  CHECK_THROWS_AS(load_graph<Integer>(bad), input_error);

  bad = good;
  bad["edges"][0]["label"] = "0";
  CHECK_THROWS_AS(load_graph<Integer>(bad), input_error);

  bad = good;
  bad["edges"][0]["label"] = "five";
  CHECK_THROWS_AS(load_graph<Integer>(bad), input_error);

  bad = good;
  bad["vertices"].push_back("v1");
  CHECK_THROWS_AS(load_graph<Integer>(bad), input_error);

  bad = good;
  bad.erase("edges");
  CHECK_THROWS_AS(load_graph<Integer>(bad), input_error);

  bad = good;
  bad["edges"][0]["label"] = 5;
  CHECK(load_graph<Integer>(bad) == fixtures::diamond());

  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), input_error);
}

TEST_CASE("completion adds unit edges and keeps the rest") {
  const auto g = fixtures::diamond();
  const auto k = completion(g);
  CHECK(k.is_complete());
  CHECK_FALSE(g.is_complete());
  REQUIRE(k.edge_count() == 6);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    CHECK(k.edge(e).label == g.edge(e).label);
    CHECK(k.edge(e).u == g.edge(e).u);
  }
  CHECK(k.edge(5).label == Integer(1));
  CHECK(std::minmax(k.edge(5).u, k.edge(5).v) == std::minmax<std::size_t>(2, 3));
  CHECK(completion(k) == k);
}

TEST_CASE("vertex permutation moves labels with the vertices") {
  const auto g = fixtures::diamond();
  const std::vector<std::size_t> perm{3, 2, 1, 0};
  const auto h = permute_vertices(g, std::span<const std::size_t>(perm));
  CHECK(h.name(3) == "v1");
  CHECK(h.edge(*h.find_edge(3, 2)).label == Integer(5));
  CHECK(h.edge(*h.find_edge(2, 0)).label == Integer(9));
  const std::vector<std::size_t> not_a_perm{0, 0, 1, 2};
  CHECK_THROWS(permute_vertices(g, std::span<const std::size_t>(not_a_perm)));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(fixtures::diamond()));
  LabeledGraph<Integer> g(4);
  g.add_edge(0, 1, 2);
  g.add_edge(2, 3, 2);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(LabeledGraph<Integer>(1)));
}

TEST_CASE("trails of the diamond") {
  const auto g = fixtures::diamond();
  // v2 -> v1: direct, via v3, via v4, plus trails that pass v1 and come back.
  const auto all = sequences(enumerate_trails(g, 1, 0));
  CHECK(all.size() == 9);
  CHECK(all.count({3, 1, 2, 4, 0}) == 1);

  const auto z = zero_trails(g, 1);
  CHECK(sequences(z) == std::set<std::vector<std::size_t>>{{0}, {3, 1}, {4, 2}});
  for (const auto& t : z) {
    CHECK(is_valid_trail(g, t));
    CHECK(t.start == 1);
    CHECK(t.end == 0);
    CHECK(t.gcd == trail_gcd(g, std::span<const std::size_t>(t.edges)));
  }
  // v4 reaches v1 or v2 directly; longer routes contain those edges or revisit.
  CHECK(sequences(zero_trails(g, 3)) == std::set<std::vector<std::size_t>>{{2}, {4}});
  CHECK_THROWS_AS(zero_trails(g, 0), precondition_error);
}

TEST_CASE("zero trails of v2 on the labelled K4") {
  const auto g = fixtures::k4();
  const std::set<std::vector<std::size_t>> published{
      {l(1)}, {l(2), l(3)}, {l(5), l(4)}, {l(2), l(6), l(4)}, {l(5), l(6), l(3)}};
  const auto z = zero_trails(g, 1);
  CHECK(z.size() == 5);
  CHECK(sequences(z) == published);
}

TEST_CASE("trail enumeration matches brute force") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + round % 3;
    const auto g = oracle::random_connected_graph(rng, n, 0.5);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const auto found = enumerate_trails(g, a, b);
        std::vector<std::vector<std::size_t>> mine;
        for (const auto& t : found) {
          CHECK(is_valid_trail(g, t));
          mine.push_back(t.edges);
        }
        std::sort(mine.begin(), mine.end());
        CHECK(mine == oracle::brute_force_trails(g, a, b));
      }
  }
}

TEST_CASE("zero trails are the inclusion-minimal trail edge sets") {
  std::mt19937 rng(17);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 3 + round % 3;
    const auto g = oracle::random_connected_graph(rng, n, 0.6);
    for (std::size_t i = 1; i < n; ++i) {
      const auto z = zero_trails(g, i);
      const auto sets = edge_sets(z);
      CHECK(sets.size() == z.size());
      CHECK(sets == oracle::brute_zero_trail_sets(g, i));
      for (const auto& t : z) CHECK(t.end < i);
    }
  }
}

TEST_CASE("prune keeps an antichain") {
  const auto g = fixtures::k4();
  auto all = enumerate_trails(g, 1, 0);
  const auto pruned = prune_contained(all);
  for (const auto& a : pruned)
    for (const auto& b : pruned) {
      if (&a == &b) continue;
      const auto sa = a.edge_set(), sb = b.edge_set();
      CHECK_FALSE(std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()));
    }
}

TEST_CASE("trail cap is enforced") {
  const auto g = completion(LabeledGraph<Integer>(7));
  CHECK_THROWS_AS(enumerate_trails(g, 6, 0, 50), enumeration_limit_error);
  CHECK_NOTHROW(zero_trails(g, 6));
}
