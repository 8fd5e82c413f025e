#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superdom/graph.hpp"
#include "superdom/solver.hpp"

namespace superdom {

// gamma_sp(G) >= n - 1/2 - sqrt((2n^2 - 2n - 4q + 1) / 4); sharp at C_4.
inline double edge_lower_bound(int n, int q) {
  if (n < 0) throw std::invalid_argument("edge_lower_bound: negative n");
  long max_q = static_cast<long>(n) * (n - 1) / 2;
  if (q < 0 || q > max_q) throw std::invalid_argument("edge_lower_bound: q out of range");
  double radicand = (2.0 * n * n - 2.0 * n - 4.0 * q + 1.0) / 4.0;
  if (radicand < 0) throw std::logic_error("edge_lower_bound: negative radicand");
  return n - 0.5 - std::sqrt(radicand);
}

// gamma_sp(G) <= 2q - n + 1 for connected G with n > 1; equality forces a tree.
inline int edge_upper_bound(const Graph& g) {
  if (g.n() <= 1) throw std::invalid_argument("edge_upper_bound: needs n > 1");
  if (!is_connected(g)) throw std::invalid_argument("edge_upper_bound: needs a connected graph");
  return 2 * g.q() - g.n() + 1;
}

// n - 2 whenever the connected graph has diameter >= 3; absent otherwise.
inline std::optional<int> diameter_bound(const Graph& g) {
  auto diam = diameter(g);
  if (!diam) throw std::invalid_argument("diameter_bound: needs a connected graph");
  if (*diam >= 3) return g.n() - 2;
  return std::nullopt;
}

struct NordhausGaddum {
  int gamma_g = 0;
  int gamma_complement = 0;
  int sum = 0;
  bool in_range = false;  // n <= sum <= 2n-1
};

// Sum over the graph and its complement; the 2n-1 extreme is checked to
// occur only for the complete/edgeless pair.
inline NordhausGaddum nordhaus_gaddum(const Graph& g, const SolverConfig& cfg = {}) {
  NordhausGaddum r;
  r.gamma_g = gamma_sp_exact(g, cfg).gamma_sp;
  r.gamma_complement = gamma_sp_exact(complement(g), cfg).gamma_sp;
  r.sum = r.gamma_g + r.gamma_complement;
  const int n = g.n();
  r.in_range = n <= r.sum && r.sum <= 2 * n - 1;
  if (r.sum == 2 * n - 1) {
    bool extreme = g.q() == 0 || g.q() == n * (n - 1) / 2;
    if (!extreme)
      throw std::logic_error("nordhaus_gaddum: sum 2n-1 on a non-extreme graph");
  }
  return r;
}

enum class BoundTag { lower_half, edge_lower, diameter_upper, edge_upper, trivial_upper };

inline const char* bound_tag_name(BoundTag t) {
  switch (t) {
    case BoundTag::lower_half: return "lower_half";
    case BoundTag::edge_lower: return "edge_lower";
    case BoundTag::diameter_upper: return "diameter_upper";
    case BoundTag::edge_upper: return "edge_upper";
    case BoundTag::trivial_upper: return "trivial_upper";
  }
  return "?";
}

struct BoundReport {
  int n = 0;
  int q = 0;
  bool connected = false;
  int gamma_sp = 0;
  int lower_half = 0;              // ceil(n/2)
  double edge_lower = 0.0;
  std::optional<int> diameter_upper;  // connected with diameter >= 3
  std::optional<int> edge_upper;      // connected with n > 1
  int trivial_upper = 0;              // n - 1 when connected with n >= 2, else n
  std::vector<BoundTag> attained;
};

// Evaluates every applicable bound against the exact value. A violated bound
// is an internal inconsistency and aborts loudly; the report doubles as a
// solver cross-check.
inline BoundReport bound_report(const Graph& g, const SolverConfig& cfg = {}) {
  constexpr double kEps = 1e-9;
  BoundReport r;
  r.n = g.n();
  r.q = g.q();
  r.connected = is_connected(g);
  r.gamma_sp = gamma_sp_exact(g, cfg).gamma_sp;
  r.lower_half = (r.n + 1) / 2;
  r.edge_lower = edge_lower_bound(r.n, r.q);
  if (r.connected) {
    r.diameter_upper = diameter_bound(g);
    if (r.n > 1) r.edge_upper = edge_upper_bound(g);
  }
  r.trivial_upper = (r.connected && r.n >= 2) ? r.n - 1 : r.n;

  auto fail = [&](const char* which) {
    std::ostringstream os;
    os << "bound_report: bound '" << which << "' violated on n=" << r.n << " q=" << r.q
       << " gamma_sp=" << r.gamma_sp;
    throw std::logic_error(os.str());
  };

  if (r.gamma_sp < r.lower_half) fail("lower_half");
  if (r.gamma_sp < static_cast<int>(std::ceil(r.edge_lower - kEps))) fail("edge_lower");
  if (r.diameter_upper && r.gamma_sp > *r.diameter_upper) fail("diameter_upper");
  if (r.edge_upper && r.gamma_sp > *r.edge_upper) fail("edge_upper");
  if (r.gamma_sp > r.trivial_upper) fail("trivial_upper");
  // rider: equality in the edge upper bound forces a tree
  if (r.edge_upper && r.gamma_sp == *r.edge_upper && !is_tree(g)) fail("edge_upper tree rider");
  // contrapositive of the diameter bound: gamma_sp = n-1 forces diameter <= 2
  if (r.connected && r.n >= 2 && r.gamma_sp == r.n - 1) {
    auto diam = diameter(g);
    if (diam && *diam > 2) fail("diameter contrapositive");
  }

  if (r.gamma_sp == r.lower_half) r.attained.push_back(BoundTag::lower_half);
  if (std::abs(r.gamma_sp - r.edge_lower) <= kEps) r.attained.push_back(BoundTag::edge_lower);
  if (r.diameter_upper && r.gamma_sp == *r.diameter_upper)
    r.attained.push_back(BoundTag::diameter_upper);
  if (r.edge_upper && r.gamma_sp == *r.edge_upper) r.attained.push_back(BoundTag::edge_upper);
  if (r.gamma_sp == r.trivial_upper) r.attained.push_back(BoundTag::trivial_upper);
  return r;
}

}  // namespace superdom
