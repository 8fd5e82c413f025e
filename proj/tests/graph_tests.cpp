#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "support.hpp"

using namespace superdom;
using test_support::make_graph;
using test_support::random_graph;

TEST_CASE("from_edge_list basics and dedup") {
  Graph p2 = make_graph(2, {{0, 1}});
  REQUIRE(p2.n() == 2);
  REQUIRE(p2.q() == 1);

  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  REQUIRE(c4.q() == 4);
  REQUIRE(c4.has_edge(3, 0));
  REQUIRE_FALSE(c4.has_edge(0, 2));

  // duplicate edges collapse
  Graph dup = make_graph(3, {{0, 1}, {0, 1}});
  REQUIRE(dup.q() == 1);
}

TEST_CASE("from_edge_list rejects bad input") {
  REQUIRE_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_graph(3, {{-1, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 3 + static_cast<int>(rng.below(10)), 0.4);
    int total = 0;
    for (int v = 0; v < g.n(); ++v) total += g.degree(v);
    REQUIRE(total == 2 * g.q());
    for (auto [u, v] : g.edges()) {
      REQUIRE(g.has_edge(u, v));
      REQUIRE(g.has_edge(v, u));
      REQUIRE_FALSE(g.neighbors(u).test(u));
    }
  }
}

TEST_CASE("complement") {
  Graph k4 = generate_standard(GraphKind::complete(4));
  REQUIRE(complement(k4).q() == 0);

  // the complement of a 4-path is again a 4-path
  Graph p4 = generate_standard(GraphKind::path(4));
  Graph cp4 = complement(p4);
  REQUIRE(cp4.q() == 3);
  REQUIRE(is_connected(cp4));
  std::vector<int> degs;
  for (int v = 0; v < 4; ++v) degs.push_back(cp4.degree(v));
  std::sort(degs.begin(), degs.end());
  REQUIRE(degs == std::vector<int>{1, 1, 2, 2});

  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng.below(12)), 0.5);
    REQUIRE(complement(complement(g)) == g);
    REQUIRE(g.q() + complement(g).q() == g.n() * (g.n() - 1) / 2);
  }
}

TEST_CASE("end vertices") {
  REQUIRE(end_vertices(generate_standard(GraphKind::path(4))) == VertexSet(4, {0, 3}));
  REQUIRE(end_vertices(generate_standard(GraphKind::cycle(5))).empty());
  REQUIRE(end_vertices(generate_standard(GraphKind::star(4))) == VertexSet(4, {1, 2, 3}));
}

TEST_CASE("support vertices") {
  auto p4 = support_vertices(generate_standard(GraphKind::path(4)));
  REQUIRE(p4.supports == VertexSet(4, {1, 2}));
  REQUIRE(p4.strong_supports.empty());

  auto star = support_vertices(generate_standard(GraphKind::star(4)));
  REQUIRE(star.supports == VertexSet(4, {0}));
  REQUIRE(star.strong_supports == VertexSet(4, {0}));

  auto c6 = support_vertices(generate_standard(GraphKind::cycle(6)));
  REQUIRE(c6.supports.empty());
}

TEST_CASE("supports sit next to end vertices") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng.below(11)), 0.3);
    VertexSet ends = end_vertices(g);
    auto info = support_vertices(g);
    for (int v = info.supports.first(); v != -1; v = info.supports.next(v))
      REQUIRE(g.neighbors(v).intersects(ends));
    for (int v = ends.first(); v != -1; v = ends.next(v))
      REQUIRE(info.supports.test(g.neighbors(v).first()));
    REQUIRE(info.strong_supports.is_subset_of(info.supports));
  }
}

TEST_CASE("diameter") {
  REQUIRE(diameter(generate_standard(GraphKind::cycle(4))) == 2);
  REQUIRE(diameter(generate_standard(GraphKind::path(5))) == 4);
  REQUIRE_FALSE(diameter(Graph(2)).has_value());  // two isolated vertices
  REQUIRE(diameter(Graph(1)) == 0);
  REQUIRE(diameter(Graph(0)) == 0);
  for (int n = 2; n <= 8; ++n) REQUIRE(diameter(generate_standard(GraphKind::complete(n))) == 1);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng.below(10)), 0.5);
    auto d = diameter(g);
    if (d) REQUIRE(*d <= g.n() - 1);
  }
}

TEST_CASE("semi-universal vertices") {
  REQUIRE(is_semi_universal(generate_standard(GraphKind::star(6)), 0));
  REQUIRE_FALSE(is_semi_universal(generate_standard(GraphKind::path(4)), 0));
  for (int k = 1; k <= 4; ++k)
    REQUIRE(is_semi_universal(generate_standard(GraphKind::friendship(k)), 0));
  REQUIRE_THROWS_AS(is_semi_universal(Graph(3), 3), std::out_of_range);
}

TEST_CASE("tree recognition") {
  REQUIRE(is_tree(generate_standard(GraphKind::path(7))));
  REQUIRE_FALSE(is_tree(generate_standard(GraphKind::cycle(4))));
  REQUIRE_FALSE(is_tree(make_graph(4, {{0, 1}, {2, 3}})));  // two disjoint edges
  REQUIRE(is_tree(Graph(1)));
  // agreement with connected + acyclic on random graphs
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng.below(9)), 0.25);
    bool reference = is_connected(g) && test_support::reference_acyclic(g);
    REQUIRE(is_tree(g) == reference);
  }
}

TEST_CASE("bipartite check") {
  std::vector<int> side;
  REQUIRE(is_bipartite(generate_standard(GraphKind::complete_bipartite(2, 3)), &side));
  REQUIRE_FALSE(is_bipartite(generate_standard(GraphKind::cycle(5))));
  REQUIRE(is_bipartite(generate_standard(GraphKind::cycle(6))));
}

TEST_CASE("generator shapes") {
  Graph c5 = generate_standard(GraphKind::cycle(5));
  for (int i = 0; i < 5; ++i) REQUIRE(c5.has_edge(i, (i + 1) % 5));

  Graph f2 = generate_standard(GraphKind::friendship(2));
  REQUIRE(f2.n() == 5);
  REQUIRE(f2.q() == 6);
  REQUIRE(diameter(f2) == 2);

  Graph k23 = generate_standard(GraphKind::complete_bipartite(2, 3));
  REQUIRE(k23.q() == 6);

  REQUIRE_THROWS_AS(generate_standard(GraphKind::cycle(2)), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_standard(GraphKind::star(1)), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_standard(GraphKind::friendship(0)), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_standard(GraphKind{}), std::invalid_argument);
}
