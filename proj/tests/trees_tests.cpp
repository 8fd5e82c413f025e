#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace superdom;
using test_support::make_graph;

namespace {

// spider: center 0 with three legs of length two
Graph spider_3x2() {
  return make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// double star: adjacent centers 0,1 with two leaves each
Graph double_star_22() {
  return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

void check_R_labeling(const Graph& t, const StatusLabeling& lab) {
  // every a-vertex has exactly one b-neighbor and vice versa
  for (int v = 0; v < t.n(); ++v) {
    int cross = 0;
    for (int w = t.neighbors(v).first(); w != -1; w = t.neighbors(v).next(w))
      if (lab.status[static_cast<size_t>(w)] != lab.status[static_cast<size_t>(v)]) ++cross;
    REQUIRE(cross == 1);
  }
}

void check_S_labeling(const Graph& t, const StatusLabeling& lab) {
  VertexSet ends = end_vertices(t);
  for (int v = 0; v < t.n(); ++v) {
    int a_nbrs = 0, b_nbrs = 0;
    for (int w = t.neighbors(v).first(); w != -1; w = t.neighbors(v).next(w)) {
      if (lab.status[static_cast<size_t>(w)] == Status::a)
        ++a_nbrs;
      else
        ++b_nbrs;
    }
    if (lab.status[static_cast<size_t>(v)] == Status::a) {
      REQUIRE(b_nbrs == 1);
      REQUIRE(ends.test(v));  // non-end vertices all carry status b
    } else {
      REQUIRE(a_nbrs <= 1);
    }
  }
}

VertexSet status_class(const StatusLabeling& lab, Status s, int n) {
  VertexSet out(n);
  for (int v = 0; v < n; ++v)
    if (lab.status[static_cast<size_t>(v)] == s) out.set(v);
  return out;
}

}  // namespace

TEST_CASE("tree bounds") {
  REQUIRE(tree_bounds(generate_standard(GraphKind::path(4))) == std::pair<int, int>{2, 2});
  REQUIRE(tree_bounds(generate_standard(GraphKind::star(6))) == std::pair<int, int>{3, 5});
  REQUIRE(gamma_sp_exact(generate_standard(GraphKind::star(6))).gamma_sp == 5);
  REQUIRE(tree_bounds(spider_3x2()) == std::pair<int, int>{4, 4});
  REQUIRE(gamma_sp_oracle(spider_3x2()).gamma_sp == 4);
  REQUIRE_THROWS_AS(tree_bounds(generate_standard(GraphKind::cycle(4))), std::invalid_argument);
  REQUIRE_THROWS_AS(tree_bounds(generate_standard(GraphKind::path(2))), std::invalid_argument);
}

TEST_CASE("tree meta") {
  auto meta = tree_meta(double_star_22());
  REQUIRE(meta.support_count == 2);
  REQUIRE(meta.supports == VertexSet(6, {0, 1}));
  REQUIRE(meta.strong_supports == VertexSet(6, {0, 1}));
  REQUIRE(meta.end_vertices == VertexSet(6, {2, 3, 4, 5}));
}

TEST_CASE("family membership flags") {
  REQUIRE(is_family_R(generate_standard(GraphKind::path(2))));
  REQUIRE(is_family_R(generate_standard(GraphKind::path(4))));
  REQUIRE_FALSE(is_family_R(generate_standard(GraphKind::star(4))));

  REQUIRE(is_family_S(generate_standard(GraphKind::path(3))));
  REQUIRE(is_family_S(generate_standard(GraphKind::path(4))));
  REQUIRE(is_family_S(generate_standard(GraphKind::star(4))));
  REQUIRE_FALSE(is_family_S(generate_standard(GraphKind::path(6))));

  REQUIRE_THROWS_AS(is_family_R(generate_standard(GraphKind::cycle(4))), std::invalid_argument);
  REQUIRE_THROWS_AS(is_family_S(generate_standard(GraphKind::path(2))), std::invalid_argument);
}

TEST_CASE("decompose_R on paths") {
  Graph p6 = generate_standard(GraphKind::path(6));
  auto dec = decompose_R(p6);
  REQUIRE(dec.has_value());
  REQUIRE(dec->sequence.steps.size() == 2);  // base pair plus two growth steps
  auto [rebuilt, lab] = replay(dec->sequence);
  REQUIRE(rebuilt == p6);
  REQUIRE(lab.status == dec->labeling.status);
  check_R_labeling(p6, dec->labeling);

  // both status classes are minimum super dominating sets
  VertexSet a = status_class(dec->labeling, Status::a, 6);
  VertexSet b = status_class(dec->labeling, Status::b, 6);
  REQUIRE(a.count() == 3);
  REQUIRE(b.count() == 3);
  REQUIRE(check_super_dominating(p6, a).ok());
  REQUIRE(check_super_dominating(p6, b).ok());
}

TEST_CASE("decompose_R rejects non-members and bad inputs") {
  REQUIRE_FALSE(decompose_R(generate_standard(GraphKind::star(4))).has_value());
  REQUIRE_THROWS_AS(decompose_R(generate_standard(GraphKind::path(5))), std::invalid_argument);
  REQUIRE_THROWS_AS(decompose_R(generate_standard(GraphKind::cycle(4))), std::invalid_argument);
}

TEST_CASE("decompose_S on named trees") {
  Graph k14 = generate_standard(GraphKind::star(5));
  auto dec = decompose_S(k14);
  REQUIRE(dec.has_value());
  auto [rebuilt, lab] = replay(dec->sequence);
  REQUIRE(rebuilt == k14);
  check_S_labeling(k14, dec->labeling);

  Graph ds = double_star_22();
  REQUIRE(gamma_sp_oracle(ds).gamma_sp == 4);  // equals n - s here
  auto dec2 = decompose_S(ds);
  REQUIRE(dec2.has_value());
  auto [rebuilt2, lab2] = replay(dec2->sequence);
  REQUIRE(rebuilt2 == ds);
  check_S_labeling(ds, dec2->labeling);

  REQUIRE_FALSE(decompose_S(generate_standard(GraphKind::path(6))).has_value());
  REQUIRE_THROWS_AS(decompose_S(generate_standard(GraphKind::path(2))), std::invalid_argument);
}

TEST_CASE("generator for the half-order family") {
  auto [p2, seq1] = generate_R(1, 9);
  REQUIRE(p2.n() == 2);
  REQUIRE(p2.q() == 1);
  REQUIRE(seq1.steps.empty());

  for (uint64_t seed = 0; seed < 6; ++seed) {
    auto [t, seq] = generate_R(2, seed);
    REQUIRE(t.n() == 4);
    std::vector<int> degs;
    for (int v = 0; v < 4; ++v) degs.push_back(t.degree(v));
    std::sort(degs.begin(), degs.end());
    REQUIRE(degs == std::vector<int>{1, 1, 2, 2});  // always a 4-path
  }

  auto [t42, seq42] = generate_R(6, 42);
  REQUIRE(gamma_sp_exact(t42).gamma_sp == 6);
  REQUIRE(support_vertices(t42).strong_supports.empty());
  auto [rebuilt, lab] = replay(seq42);
  REQUIRE(rebuilt == t42);
  check_R_labeling(t42, lab);
  VertexSet a = status_class(lab, Status::a, t42.n());
  VertexSet b = status_class(lab, Status::b, t42.n());
  REQUIRE(a.count() == 6);
  REQUIRE(b.count() == 6);
  REQUIRE(check_super_dominating(t42, a).ok());
  REQUIRE(check_super_dominating(t42, b).ok());

  REQUIRE_THROWS_AS(generate_R(0, 1), std::invalid_argument);
}

TEST_CASE("generator for the support-deficiency family") {
  auto [p3, seq1] = generate_S(1, 4);
  REQUIRE(p3 == generate_standard(GraphKind::path(3)));

  auto [t, seq] = generate_S(5, 3);
  int s = support_vertices(t).supports.count();
  REQUIRE(gamma_sp_exact(t).gamma_sp == t.n() - s);
  auto [rebuilt, lab] = replay(seq);
  REQUIRE(rebuilt == t);
  check_S_labeling(t, lab);
  VertexSet a = status_class(lab, Status::a, t.n());
  VertexSet b = status_class(lab, Status::b, t.n());
  REQUIRE(a.count() == s);       // one status-a leaf per support
  REQUIRE(b.count() == t.n() - s);
  REQUIRE(check_super_dominating(t, b).ok());

  REQUIRE_THROWS_AS(generate_S(0, 1), std::invalid_argument);
}

TEST_CASE("generated family members decompose and replay") {
  auto [caterpillar, seq] = generate_R(5, 7);
  auto dec = decompose_R(caterpillar);
  REQUIRE(dec.has_value());
  REQUIRE(replay(dec->sequence).first == caterpillar);

  for (uint64_t seed = 0; seed < 8; ++seed) {
    auto [t, s] = generate_S(2, seed);
    REQUIRE((t.n() == 4 || t.n() == 5));  // one step of kind 1 adds two vertices
    REQUIRE(replay(s).first == t);
    REQUIRE(decompose_S(t).has_value());
  }
}

TEST_CASE("build sequence serialization round trips") {
  auto [tr, seq_r] = generate_R(5, 12);
  BuildSequence back_r = parse_build_sequence(serialize(seq_r));
  auto [g1, l1] = replay(back_r);
  REQUIRE(g1 == tr);

  auto [ts, seq_s] = generate_S(6, 12);
  BuildSequence back_s = parse_build_sequence(serialize(seq_s));
  auto [g2, l2] = replay(back_s);
  REQUIRE(g2 == ts);

  REQUIRE_THROWS_AS(parse_build_sequence("bogus"), std::invalid_argument);
}

TEST_CASE("replay enforces step conditions") {
  // kind-2 attachment to a support must fail
  BuildSequence seq;
  seq.family = 'S';
  seq.n = 4;
  seq.base = {0, 1, 2};
  seq.steps.push_back(BuildStep{2, 3, -1, 1});  // 1 supports leaf 0 and leaf 2
  REQUIRE_THROWS_AS(replay(seq), std::invalid_argument);

  // attach to a status-a vertex must fail
  BuildSequence seq2;
  seq2.family = 'S';
  seq2.n = 4;
  seq2.base = {0, 1, 2};
  seq2.steps.push_back(BuildStep{3, -1, 3, 0});
  REQUIRE_THROWS_AS(replay(seq2), std::invalid_argument);
}

TEST_CASE("split check") {
  auto p4 = split_check(generate_standard(GraphKind::path(4)));
  REQUIRE(p4.size() == 3);
  int additive = 0;
  for (const auto& rep : p4)
    if (rep.additive) {
      ++additive;
      REQUIRE(rep.u == 1);
      REQUIRE(rep.v == 2);
      REQUIRE(rep.gamma1 == 1);
      REQUIRE(rep.gamma2 == 1);
    }
  REQUIRE(additive == 1);

  auto p6 = split_check(generate_standard(GraphKind::path(6)));
  std::vector<std::pair<int, int>> additive_edges;
  for (const auto& rep : p6)
    if (rep.additive) additive_edges.emplace_back(rep.u, rep.v);
  REQUIRE(additive_edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  auto [t, seq] = generate_R(5, 7);
  REQUIRE_NOTHROW(split_check(t));  // a violated half aborts

  REQUIRE_THROWS_AS(split_check(generate_standard(GraphKind::star(4))), std::invalid_argument);
}

TEST_CASE("prufer correspondence") {
  REQUIRE(tree_from_prufer({}) == generate_standard(GraphKind::path(2)));
  // sequence (3,3,3) on five vertices is the star centered at 3
  Graph star_at_3 = tree_from_prufer({3, 3, 3});
  REQUIRE(star_at_3.degree(3) == 4);
  REQUIRE(star_at_3.q() == 4);
  // all 125 labeled trees on five vertices appear exactly once
  std::set<std::string> seen;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        Graph t = tree_from_prufer({a, b, c});
        REQUIRE(is_tree(t));
        seen.insert(emit_graph6(t));
      }
  REQUIRE(seen.size() == 125);
  REQUIRE_THROWS_AS(tree_from_prufer({5}), std::invalid_argument);
}

TEST_CASE("decompositions agree with membership on every small tree") {
  // exhaustive cross-validation up to n=6 (the acceptance suite goes to 8)
  for (int n = 2; n <= 6; ++n) {
    long total = 1;
    for (int i = 0; i < n - 2; ++i) total *= n;
    for (long code = 0; code < total; ++code) {
      std::vector<int> seq;
      long c = code;
      for (int i = 0; i < n - 2; ++i) {
        seq.push_back(static_cast<int>(c % n));
        c /= n;
      }
      Graph t = tree_from_prufer(seq);
      if (n % 2 == 0) {
        auto dec = decompose_R(t);
        REQUIRE(dec.has_value() == is_family_R(t));
        if (dec) {
          auto [rebuilt, lab] = replay(dec->sequence);
          REQUIRE(rebuilt == t);
          check_R_labeling(t, lab);
        }
      }
      if (n >= 3) {
        auto dec = decompose_S(t);
        REQUIRE(dec.has_value() == is_family_S(t));
        if (dec) {
          auto [rebuilt, lab] = replay(dec->sequence);
          REQUIRE(rebuilt == t);
          check_S_labeling(t, lab);
        }
      }
    }
  }
}
