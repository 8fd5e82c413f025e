#pragma once

#include <string>

#include "superdom/graph.hpp"

namespace superdom {

// Recognized standard families. Labelings are fixed:
//   path:                edges (i, i+1)
//   cycle:               edges (i, (i+1) mod n)
//   star(n):             center 0, leaves 1..n-1  (K_{1,n-1} on n vertices)
//   complete_bipartite:  parts {0..m-1} and {m..m+n-1}
//   friendship(k):       hub 0; pair edges (2i-1, 2i) and hub edges to both,
//                        for i = 1..k  (n = 2k+1, q = 3k)
struct GraphKind {
  enum class Tag { path, cycle, complete, star, complete_bipartite, empty, friendship, other };

  Tag tag = Tag::other;
  int a = 0;
  int b = 0;

  static GraphKind path(int n) { return {Tag::path, n, 0}; }
  static GraphKind cycle(int n) { return {Tag::cycle, n, 0}; }
  static GraphKind complete(int n) { return {Tag::complete, n, 0}; }
  static GraphKind star(int n) { return {Tag::star, n, 0}; }
  static GraphKind complete_bipartite(int m, int n) { return {Tag::complete_bipartite, m, n}; }
  static GraphKind empty(int n) { return {Tag::empty, n, 0}; }
  static GraphKind friendship(int k) { return {Tag::friendship, k, 0}; }
};

inline std::string kind_name(const GraphKind& k) {
  using Tag = GraphKind::Tag;
  switch (k.tag) {
    case Tag::path: return "path(" + std::to_string(k.a) + ")";
    case Tag::cycle: return "cycle(" + std::to_string(k.a) + ")";
    case Tag::complete: return "complete(" + std::to_string(k.a) + ")";
    case Tag::star: return "star(" + std::to_string(k.a) + ")";
    case Tag::complete_bipartite:
      return "complete_bipartite(" + std::to_string(k.a) + "," + std::to_string(k.b) + ")";
    case Tag::empty: return "empty(" + std::to_string(k.a) + ")";
    case Tag::friendship: return "friendship(" + std::to_string(k.a) + ")";
    case Tag::other: return "other";
  }
  return "other";
}

inline Graph generate_standard(const GraphKind& kind) {
  using Tag = GraphKind::Tag;
  std::vector<std::pair<int, int>> edges;
  switch (kind.tag) {
    case Tag::path: {
      if (kind.a < 1) throw std::invalid_argument("generate_standard: path needs n >= 1");
      for (int i = 0; i + 1 < kind.a; ++i) edges.emplace_back(i, i + 1);
      return Graph::from_edge_list(kind.a, edges);
    }
    case Tag::cycle: {
      if (kind.a < 3) throw std::invalid_argument("generate_standard: cycle needs n >= 3");
      for (int i = 0; i < kind.a; ++i) edges.emplace_back(i, (i + 1) % kind.a);
      return Graph::from_edge_list(kind.a, edges);
    }
    case Tag::complete: {
      if (kind.a < 1) throw std::invalid_argument("generate_standard: complete needs n >= 1");
      for (int u = 0; u < kind.a; ++u)
        for (int v = u + 1; v < kind.a; ++v) edges.emplace_back(u, v);
      return Graph::from_edge_list(kind.a, edges);
    }
    case Tag::star: {
      if (kind.a < 2) throw std::invalid_argument("generate_standard: star needs n >= 2");
      for (int v = 1; v < kind.a; ++v) edges.emplace_back(0, v);
      return Graph::from_edge_list(kind.a, edges);
    }
    case Tag::complete_bipartite: {
      if (kind.a < 1 || kind.b < 1)
        throw std::invalid_argument("generate_standard: complete_bipartite needs m,n >= 1");
      for (int u = 0; u < kind.a; ++u)
        for (int v = 0; v < kind.b; ++v) edges.emplace_back(u, kind.a + v);
      return Graph::from_edge_list(kind.a + kind.b, edges);
    }
    case Tag::empty: {
      if (kind.a < 0) throw std::invalid_argument("generate_standard: empty needs n >= 0");
      return Graph(kind.a);
    }
    case Tag::friendship: {
      if (kind.a < 1) throw std::invalid_argument("generate_standard: friendship needs k >= 1");
      for (int i = 1; i <= kind.a; ++i) {
        edges.emplace_back(2 * i - 1, 2 * i);
        edges.emplace_back(0, 2 * i - 1);
        edges.emplace_back(0, 2 * i);
      }
      return Graph::from_edge_list(2 * kind.a + 1, edges);
    }
    case Tag::other: break;
  }
  throw std::invalid_argument("generate_standard: kind 'other' cannot be generated");
}

}  // namespace superdom
