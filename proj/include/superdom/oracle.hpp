#pragma once

#include "superdom/solver.hpp"

namespace superdom {

// Brute-force reference solver: enumerate candidate sets in increasing size
// and lexicographic order, verify each one straight from the definition.
// Shares only the Graph type with the search-based solver so the two paths
// can cross-check each other.
inline Solution gamma_sp_oracle(const Graph& g) {
  constexpr int kCap = 20;
  const int n = g.n();
  if (n > kCap) throw std::invalid_argument("gamma_sp_oracle: n exceeds cap (20)");
  if (n == 0) return Solution{0, VertexSet(0), {}, true};

  std::vector<char> in_d(static_cast<size_t>(n), 0);

  auto witness_for = [&](int v) -> int {
    for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
      if (!in_d[static_cast<size_t>(u)]) continue;
      bool private_enough = true;
      for (int x = g.neighbors(u).first(); x != -1; x = g.neighbors(u).next(x)) {
        if (x != v && !in_d[static_cast<size_t>(x)]) {
          private_enough = false;
          break;
        }
      }
      if (private_enough) return u;
    }
    return -1;
  };

  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    for (;;) {
      std::fill(in_d.begin(), in_d.end(), 0);
      for (int v : comb) in_d[static_cast<size_t>(v)] = 1;

      bool valid = true;
      for (int v = 0; v < n && valid; ++v)
        if (!in_d[static_cast<size_t>(v)] && witness_for(v) == -1) valid = false;

      if (valid) {
        Solution sol;
        sol.gamma_sp = k;
        sol.min_set = VertexSet(n);
        for (int v : comb) sol.min_set.set(v);
        for (int v = 0; v < n; ++v)
          if (!in_d[static_cast<size_t>(v)]) sol.witness.assignment.emplace(v, witness_for(v));
        // perfect: the cut edges match every vertex exactly once
        sol.perfect = true;
        for (int v = 0; v < n && sol.perfect; ++v) {
          int cross = 0;
          for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (in_d[static_cast<size_t>(u)] != in_d[static_cast<size_t>(v)]) ++cross;
          if (cross != 1) sol.perfect = false;
        }
        return sol;
      }

      int i = k - 1;
      while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
  }
  // k == n accepts unconditionally above; not reached
  throw std::logic_error("gamma_sp_oracle: enumeration exhausted");
}

}  // namespace superdom
