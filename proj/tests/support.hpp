#pragma once

#include <string>
#include <vector>

#include "superdom/superdom.hpp"

namespace test_support {

inline superdom::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return superdom::Graph::from_edge_list(n, std::vector<std::pair<int, int>>(edges));
}

// G(n,p) with a fixed integer threshold so corpora replay identically.
inline superdom::Graph random_graph(superdom::SplitMix64& rng, int n, double p) {
  const uint64_t threshold = static_cast<uint64_t>(p * 18446744073709551615.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next() < threshold) edges.emplace_back(u, v);
  return superdom::Graph::from_edge_list(n, edges);
}

// Every labeled graph on n vertices, by edge mask; intended for n <= 5.
inline std::vector<superdom::Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<superdom::Graph> out;
  const uint64_t total = uint64_t{1} << slots.size();
  out.reserve(total);
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    out.push_back(superdom::Graph::from_edge_list(n, edges));
  }
  return out;
}

// Second graph6 decoder, written against the format note rather than the
// library, for cross-checking emit/parse.
inline superdom::Graph reference_decode_graph6(const std::string& s) {
  size_t pos = 0;
  long n = 0;
  if (s.at(0) != '~') {
    n = s[0] - 63;
    pos = 1;
  } else if (s.at(1) != '~') {
    n = (static_cast<long>(s[1] - 63) << 12) + ((s[2] - 63) << 6) + (s[3] - 63);
    pos = 4;
  } else {
    for (size_t i = 2; i < 8; ++i) n = (n << 6) + (s.at(i) - 63);
    pos = 8;
  }
  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int ch = s.at(pos + static_cast<size_t>(bit / 6)) - 63;
      if ((ch >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return superdom::Graph::from_edge_list(static_cast<int>(n), edges);
}

// Union-find acyclicity check, independent of the library's tree test.
inline bool reference_acyclic(const superdom::Graph& g) {
  std::vector<int> parent(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) parent[static_cast<size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (auto [u, v] : g.edges()) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<size_t>(ru)] = rv;
  }
  return true;
}

}  // namespace test_support
