#pragma once

#include <optional>
#include <string>

#include "superdom/generators.hpp"
#include "superdom/graph.hpp"

namespace superdom {

// gamma_sp of C_n: ceil(n/2) when n = 0,3 (mod 4), ceil((n+1)/2) otherwise.
inline int gamma_sp_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gamma_sp_cycle: n must be >= 3");
  int r = n % 4;
  return (r == 0 || r == 3) ? (n + 1) / 2 : (n + 2) / 2;
}

inline int gamma_sp_path(int n) {
  if (n < 3) throw std::invalid_argument("gamma_sp_path: n must be >= 3");
  return (n + 1) / 2;
}

inline int gamma_sp_complete(int n) {
  if (n < 2) throw std::invalid_argument("gamma_sp_complete: n must be >= 2");
  return n - 1;
}

// K_{1,n-1} on n vertices.
inline int gamma_sp_star(int n) {
  if (n < 2) throw std::invalid_argument("gamma_sp_star: n must be >= 2");
  return n - 1;
}

inline int gamma_sp_complete_bipartite(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("gamma_sp_complete_bipartite: need min(m,n) >= 2");
  return m + n - 2;
}

// Minimum super dominating set of the standard cycle labeling, by residue
// class of n mod 4: the pairs {4i+1, 4i+2}, topped up with the last one or
// two vertices where the pair pattern leaves a remainder.
inline VertexSet cycle_min_set(int n) {
  if (n < 3) throw std::invalid_argument("cycle_min_set: n must be >= 3");
  VertexSet d(n);
  const int k = n / 4;
  const int r = n % 4;
  const int pairs = (r == 3) ? k + 1 : k;
  for (int i = 0; i < pairs; ++i) {
    d.set(4 * i + 1);
    d.set(4 * i + 2);
  }
  if (r == 1) d.set(n - 1);
  if (r == 2) {
    d.set(n - 2);
    d.set(n - 1);
  }
  return d;
}

struct ClosedForm {
  GraphKind kind;
  int value = 0;
  std::string witness_construction;
};

// Structural recognition (degrees, connectivity, bipartition); false
// negatives fall through to the exact solver, never false positives.
inline std::optional<ClosedForm> recognize_and_solve(const Graph& g) {
  const int n = g.n();
  const int q = g.q();

  if (q == 0) return ClosedForm{GraphKind::empty(n), n, "whole vertex set"};
  if (n >= 2 && q == n * (n - 1) / 2)
    return ClosedForm{GraphKind::complete(n), n - 1, "all but one vertex"};

  if (!is_connected(g)) return std::nullopt;

  bool all_two = true, path_degrees = true;
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d != 2) all_two = false;
    if (d == 1)
      ++leaves;
    else if (d != 2)
      path_degrees = false;
  }
  if (n >= 3 && all_two)
    return ClosedForm{GraphKind::cycle(n), gamma_sp_cycle(n), "alternating adjacent pairs"};
  if (n >= 3 && path_degrees && leaves == 2)
    return ClosedForm{GraphKind::path(n), gamma_sp_path(n), "alternating adjacent pairs"};

  std::vector<int> side;
  if (is_bipartite(g, &side)) {
    int m0 = 0;
    for (int c : side)
      if (c == 0) ++m0;
    int m1 = n - m0;
    if (static_cast<long>(m0) * m1 == q) {  // complete across the bipartition
      if (m0 > m1) std::swap(m0, m1);
      if (m0 == 1 && m1 >= 2)
        return ClosedForm{GraphKind::star(n), gamma_sp_star(n), "all but one leaf"};
      if (m0 >= 2)
        return ClosedForm{GraphKind::complete_bipartite(m0, m1),
                          gamma_sp_complete_bipartite(m0, m1), "all but one vertex per side"};
    }
  }
  return std::nullopt;
}

}  // namespace superdom
