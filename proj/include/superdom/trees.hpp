#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "superdom/graph.hpp"
#include "superdom/rng.hpp"
#include "superdom/solver.hpp"

namespace superdom {

enum class Status : unsigned char { a, b };

// Per-vertex a/b classification induced by a build sequence.
struct StatusLabeling {
  std::vector<Status> status;
};

// kind 0: pair step of the n/2 family -- adds a,b with edge (a,b) plus an
//         edge from the attach vertex to whichever of a/b shares its status.
// kind 1: adds a,b with edges (a,b) and (b,attach); attach has status b.
// kind 2: adds a with edge (a,attach); attach is a non-support b vertex.
// kind 3: adds b with edge (b,attach); attach is a support b vertex.
struct BuildStep {
  int kind = 0;
  int a = -1;
  int b = -1;
  int attach = -1;
};

struct BuildSequence {
  char family = 'R';       // 'R' or 'S'
  int n = 0;               // vertex count of the finished tree
  std::vector<int> base;   // R: {a1, b1}; S: {a1, b0, b1}
  std::vector<BuildStep> steps;
};

// Tree statistics used by the extremal-family results.
struct TreeMeta {
  int support_count = 0;
  VertexSet end_vertices;
  VertexSet supports;
  VertexSet strong_supports;
};

inline TreeMeta tree_meta(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_meta: input is not a tree");
  auto info = support_vertices(t);
  return TreeMeta{info.supports.count(), end_vertices(t), info.supports, info.strong_supports};
}

// ceil(n/2) <= gamma_sp(T) <= n - s for trees with n >= 3 supports counted by s.
inline std::pair<int, int> tree_bounds(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_bounds: input is not a tree");
  if (t.n() < 3) throw std::invalid_argument("tree_bounds: needs n >= 3");
  int s = support_vertices(t).supports.count();
  return {(t.n() + 1) / 2, t.n() - s};
}

// Membership in the lower-extremal family: exactly the trees with
// gamma_sp = n/2, which makes the value comparison the membership test.
inline bool is_family_R(const Graph& t, const SolverConfig& cfg = {}) {
  if (!is_tree(t)) throw std::invalid_argument("is_family_R: input is not a tree");
  if (t.n() < 2) throw std::invalid_argument("is_family_R: needs n >= 2");
  if (t.n() % 2 != 0) return false;
  return 2 * gamma_sp_exact(t, cfg).gamma_sp == t.n();
}

// Membership in the upper-extremal family: the trees with gamma_sp = n - s.
inline bool is_family_S(const Graph& t, const SolverConfig& cfg = {}) {
  if (!is_tree(t)) throw std::invalid_argument("is_family_S: input is not a tree");
  if (t.n() < 3) throw std::invalid_argument("is_family_S: needs n >= 3");
  int s = support_vertices(t).supports.count();
  return gamma_sp_exact(t, cfg).gamma_sp == t.n() - s;
}

namespace detail {

struct MutableTree {
  explicit MutableTree(const Graph& g)
      : n(g.n()), alive(VertexSet::full(g.n())), alive_count(g.n()) {
    rows.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) rows.push_back(g.neighbors(v));
  }

  int degree(int v) const { return rows[static_cast<size_t>(v)].count(); }

  void remove(int v) {
    auto& row = rows[static_cast<size_t>(v)];
    for (int w = row.first(); w != -1; w = row.next(w)) rows[static_cast<size_t>(w)].reset(v);
    row.clear();
    alive.reset(v);
    --alive_count;
  }

  int eccentricity(int src) const {
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    dist[static_cast<size_t>(src)] = 0;
    queue.push_back(src);
    int ecc = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      const auto& row = rows[static_cast<size_t>(u)];
      for (int w = row.first(); w != -1; w = row.next(w)) {
        if (dist[static_cast<size_t>(w)] == -1) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          ecc = std::max(ecc, dist[static_cast<size_t>(w)]);
          queue.push_back(w);
        }
      }
    }
    return ecc;
  }

  int n;
  std::vector<VertexSet> rows;
  VertexSet alive;
  int alive_count;
};

// Longest paths of a tree end in leaves; this returns (leaf, its neighbor)
// for every leaf whose eccentricity attains the diameter, ascending by leaf.
inline std::vector<std::pair<int, int>> diametral_leaf_candidates(const MutableTree& t) {
  std::vector<std::pair<int, int>> leaf_ecc;
  int diam = 0;
  for (int v = t.alive.first(); v != -1; v = t.alive.next(v)) {
    if (t.degree(v) != 1) continue;
    int e = t.eccentricity(v);
    leaf_ecc.emplace_back(v, e);
    diam = std::max(diam, e);
  }
  std::vector<std::pair<int, int>> out;
  for (auto [v, e] : leaf_ecc)
    if (e == diam) out.emplace_back(v, t.rows[static_cast<size_t>(v)].first());
  return out;
}

inline Graph induced_subtree(const Graph& g, const VertexSet& keep, std::vector<int>* label_of) {
  std::vector<int> fwd(static_cast<size_t>(g.n()), -1);
  std::vector<int> back;
  for (int v = keep.first(); v != -1; v = keep.next(v)) {
    fwd[static_cast<size_t>(v)] = static_cast<int>(back.size());
    back.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = keep.first(); v != -1; v = keep.next(v))
    for (int w = g.neighbors(v).next(v); w != -1; w = g.neighbors(v).next(w))
      if (keep.test(w)) edges.emplace_back(fwd[static_cast<size_t>(v)], fwd[static_cast<size_t>(w)]);
  if (label_of) *label_of = std::move(back);
  return Graph::from_edge_list(keep.count(), edges);
}

}  // namespace detail

struct Decomposition {
  BuildSequence sequence;
  StatusLabeling labeling;
};

// Reverse construction for the n/2 family: repeatedly locate a longest path,
// demand that its second vertex has degree 2, and strip the end pair; the
// base must reduce to a single edge. Status flows from the attach vertex
// when the strips are replayed forward.
inline std::optional<Decomposition> decompose_R(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("decompose_R: input is not a tree");
  const int n = t.n();
  if (n < 2) throw std::invalid_argument("decompose_R: needs n >= 2");
  if (n % 2 != 0) throw std::invalid_argument("decompose_R: needs even n");

  detail::MutableTree mt(t);
  struct Strip {
    int leaf, second, attach;
  };
  std::vector<Strip> strips;
  while (mt.alive_count > 2) {
    auto cands = detail::diametral_leaf_candidates(mt);
    auto [x1, x2] = cands.front();
    if (mt.degree(x2) != 2) return std::nullopt;
    VertexSet others = mt.rows[static_cast<size_t>(x2)];
    others.reset(x1);
    int x3 = others.first();
    strips.push_back({x1, x2, x3});
    mt.remove(x1);
    mt.remove(x2);
  }
  const int a1 = mt.alive.first();
  const int b1 = mt.alive.next(a1);

  StatusLabeling lab;
  lab.status.assign(static_cast<size_t>(n), Status::b);
  lab.status[static_cast<size_t>(a1)] = Status::a;
  BuildSequence seq;
  seq.family = 'R';
  seq.n = n;
  seq.base = {a1, b1};
  for (auto it = strips.rbegin(); it != strips.rend(); ++it) {
    Status s = lab.status[static_cast<size_t>(it->attach)];
    lab.status[static_cast<size_t>(it->second)] = s;
    lab.status[static_cast<size_t>(it->leaf)] = (s == Status::a) ? Status::b : Status::a;
    BuildStep step;
    step.kind = 0;
    step.attach = it->attach;
    if (s == Status::a) {
      step.a = it->second;
      step.b = it->leaf;
    } else {
      step.a = it->leaf;
      step.b = it->second;
    }
    seq.steps.push_back(step);
  }
  return Decomposition{std::move(seq), std::move(lab)};
}

// Reverse construction for the n-s family, following the longest-path case
// split: a second vertex of degree > 2 sheds one leaf (kind 2/3), degree 2
// sheds the end pair (kind 1), down to a 3- or 4-vertex base. Strips record
// which surviving vertices are forced to status b; a tree is rejected when
// those constraints collide with the vertices forced to status a.
inline std::optional<Decomposition> decompose_S(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("decompose_S: input is not a tree");
  const int n = t.n();
  if (n < 3) throw std::invalid_argument("decompose_S: needs n >= 3");

  detail::MutableTree mt(t);
  VertexSet required_b(n);
  VertexSet forced_a(n);
  struct Strip {
    int kind;    // 1, 2 or 3
    int v1;      // stripped leaf (kind 1: the outer leaf / new a)
    int v2;      // kind 1 only: stripped second vertex / new b
    int attach;  // vertex the step hangs from
  };
  std::vector<Strip> strips;

  while (mt.alive_count > 4) {
    auto cands = detail::diametral_leaf_candidates(mt);
    int maxdeg = 0;
    for (auto [v1, v2] : cands) maxdeg = std::max(maxdeg, mt.degree(v2));
    std::erase_if(cands, [&](const auto& c) { return mt.degree(c.second) != maxdeg; });

    if (maxdeg > 2) {
      int v2 = cands.front().second;
      // shed one leaf hanging off v2, preferring one already pinned to b
      int pinned = -1, free_leaf = -1;
      const auto& row = mt.rows[static_cast<size_t>(v2)];
      for (int x = row.first(); x != -1; x = row.next(x)) {
        if (mt.degree(x) != 1) continue;
        if (required_b.test(x)) {
          if (pinned == -1) pinned = x;
        } else if (free_leaf == -1) {
          free_leaf = x;
        }
      }
      int x = (pinned != -1) ? pinned : free_leaf;
      mt.remove(x);
      bool still_support = false;
      for (int w = mt.rows[static_cast<size_t>(v2)].first(); w != -1;
           w = mt.rows[static_cast<size_t>(v2)].next(w))
        if (mt.degree(w) == 1) {
          still_support = true;
          break;
        }
      int kind = still_support ? 3 : 2;
      strips.push_back({kind, x, -1, v2});
      required_b.set(v2);
      if (kind == 2) forced_a.set(x);
    } else {
      // the pair's outer leaf becomes an a-vertex, so avoid pinned leaves
      int v1 = -1, v2 = -1;
      for (auto [c1, c2] : cands) {
        if (!required_b.test(c1)) {
          v1 = c1;
          v2 = c2;
          break;
        }
      }
      if (v1 == -1) {
        v1 = cands.front().first;
        v2 = cands.front().second;
      }
      VertexSet others = mt.rows[static_cast<size_t>(v2)];
      others.reset(v1);
      int v3 = others.first();
      strips.push_back({1, v1, v2, v3});
      required_b.set(v3);
      forced_a.set(v1);
      mt.remove(v1);
      mt.remove(v2);
    }
  }

  // base tree on 3 or 4 vertices
  std::vector<int> vs = mt.alive.members();
  std::vector<int> base;
  std::optional<BuildStep> base_step;
  VertexSet base_a(n);
  if (vs.size() == 3) {
    int mid = -1;
    std::vector<int> ends;
    for (int v : vs) {
      if (mt.degree(v) == 2)
        mid = v;
      else
        ends.push_back(v);
    }
    int a1 = -1;
    for (int e : ends)
      if (!required_b.test(e)) {
        a1 = e;
        break;
      }
    if (a1 == -1) return std::nullopt;
    int b1 = (ends[0] == a1) ? ends[1] : ends[0];
    base = {a1, mid, b1};
    base_a.set(a1);
  } else {
    int center = -1;
    for (int v : vs)
      if (mt.degree(v) == 3) center = v;
    if (center == -1) {
      // base path on 4 vertices: both ends carry status a
      std::vector<int> ends;
      for (int v : vs)
        if (mt.degree(v) == 1) ends.push_back(v);
      if (required_b.test(ends[0]) || required_b.test(ends[1])) return std::nullopt;
      int m1 = mt.rows[static_cast<size_t>(ends[0])].first();
      int m2 = mt.rows[static_cast<size_t>(ends[1])].first();
      base = {ends[0], m1, m2};
      base_step = BuildStep{2, ends[1], -1, m2};
      base_a.set(ends[0]);
      base_a.set(ends[1]);
    } else {
      // base star on 4 vertices: exactly one leaf carries status a
      std::vector<int> leaves;
      for (int v : vs)
        if (v != center) leaves.push_back(v);
      int a1 = -1;
      for (int l : leaves)
        if (!required_b.test(l)) {
          a1 = l;
          break;
        }
      if (a1 == -1) return std::nullopt;
      int b1 = -1, rest = -1;
      for (int l : leaves) {
        if (l == a1) continue;
        if (b1 == -1)
          b1 = l;
        else
          rest = l;
      }
      base = {a1, center, b1};
      base_step = BuildStep{3, -1, rest, center};
      base_a.set(a1);
    }
  }

  VertexSet a_set = forced_a | base_a;
  if (a_set.intersects(required_b)) return std::nullopt;

  StatusLabeling lab;
  lab.status.assign(static_cast<size_t>(n), Status::b);
  for (int v = a_set.first(); v != -1; v = a_set.next(v))
    lab.status[static_cast<size_t>(v)] = Status::a;

  BuildSequence seq;
  seq.family = 'S';
  seq.n = n;
  seq.base = base;
  if (base_step) seq.steps.push_back(*base_step);
  for (auto it = strips.rbegin(); it != strips.rend(); ++it) {
    BuildStep st;
    st.kind = it->kind;
    st.attach = it->attach;
    if (it->kind == 1) {
      st.a = it->v1;
      st.b = it->v2;
    } else if (it->kind == 2) {
      st.a = it->v1;
    } else {
      st.b = it->v1;
    }
    seq.steps.push_back(st);
  }
  return Decomposition{std::move(seq), std::move(lab)};
}

// Replays a build sequence from its base, enforcing each step's side
// condition at step time. Throws on any violation.
inline std::pair<Graph, StatusLabeling> replay(const BuildSequence& seq) {
  const int n = seq.n;
  if (n < 1) throw std::invalid_argument("replay: bad vertex count");
  std::vector<char> present(static_cast<size_t>(n), 0);
  StatusLabeling lab;
  lab.status.assign(static_cast<size_t>(n), Status::b);
  std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
  int added = 0;

  auto claim = [&](int v, Status s, const char* role) {
    if (v < 0 || v >= n)
      throw std::invalid_argument(std::string("replay: ") + role + " out of range");
    if (present[static_cast<size_t>(v)])
      throw std::invalid_argument(std::string("replay: ") + role + " already present");
    present[static_cast<size_t>(v)] = 1;
    lab.status[static_cast<size_t>(v)] = s;
    ++added;
  };
  auto need_present = [&](int v, const char* role) {
    if (v < 0 || v >= n || !present[static_cast<size_t>(v)])
      throw std::invalid_argument(std::string("replay: ") + role + " not present");
  };
  auto link = [&](int u, int v) {
    rows[static_cast<size_t>(u)].set(v);
    rows[static_cast<size_t>(v)].set(u);
  };
  auto is_support_now = [&](int v) {
    const auto& row = rows[static_cast<size_t>(v)];
    for (int w = row.first(); w != -1; w = row.next(w))
      if (rows[static_cast<size_t>(w)].count() == 1) return true;
    return false;
  };

  if (seq.family == 'R') {
    if (seq.base.size() != 2) throw std::invalid_argument("replay: base of the R family needs 2 vertices");
    claim(seq.base[0], Status::a, "base a");
    claim(seq.base[1], Status::b, "base b");
    link(seq.base[0], seq.base[1]);
    for (const auto& st : seq.steps) {
      if (st.kind != 0) throw std::invalid_argument("replay: R sequence with a non-R step");
      need_present(st.attach, "attach vertex");
      claim(st.a, Status::a, "step a");
      claim(st.b, Status::b, "step b");
      link(st.a, st.b);
      link(st.attach, lab.status[static_cast<size_t>(st.attach)] == Status::a ? st.a : st.b);
    }
  } else if (seq.family == 'S') {
    if (seq.base.size() != 3) throw std::invalid_argument("replay: base of the S family needs 3 vertices");
    claim(seq.base[0], Status::a, "base a");
    claim(seq.base[1], Status::b, "base b0");
    claim(seq.base[2], Status::b, "base b1");
    link(seq.base[0], seq.base[1]);
    link(seq.base[1], seq.base[2]);
    for (const auto& st : seq.steps) {
      need_present(st.attach, "attach vertex");
      if (lab.status[static_cast<size_t>(st.attach)] != Status::b)
        throw std::invalid_argument("replay: attach vertex must have status b");
      switch (st.kind) {
        case 1:
          claim(st.b, Status::b, "step b");
          link(st.b, st.attach);
          claim(st.a, Status::a, "step a");
          link(st.a, st.b);
          break;
        case 2:
          if (is_support_now(st.attach))
            throw std::invalid_argument("replay: kind-2 attach vertex must be a non-support");
          claim(st.a, Status::a, "step a");
          link(st.a, st.attach);
          break;
        case 3:
          if (!is_support_now(st.attach))
            throw std::invalid_argument("replay: kind-3 attach vertex must be a support");
          claim(st.b, Status::b, "step b");
          link(st.b, st.attach);
          break;
        default:
          throw std::invalid_argument("replay: unknown step kind");
      }
    }
  } else {
    throw std::invalid_argument("replay: unknown family");
  }
  if (added != n) throw std::invalid_argument("replay: sequence does not cover every vertex");

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = rows[static_cast<size_t>(u)].next(u); v != -1;
         v = rows[static_cast<size_t>(u)].next(v))
      edges.emplace_back(u, v);
  return {Graph::from_edge_list(n, edges), std::move(lab)};
}

// Line format: header "R n=<n>" / "S n=<n>", one "base ..." line, then one
// "step ..." line per build step, using key=value fields.
inline std::string serialize(const BuildSequence& seq) {
  std::ostringstream os;
  os << seq.family << " n=" << seq.n << "\n";
  if (seq.family == 'R') {
    os << "base a=" << seq.base[0] << " b=" << seq.base[1] << "\n";
    for (const auto& st : seq.steps)
      os << "step a=" << st.a << " b=" << st.b << " attach=" << st.attach << "\n";
  } else {
    os << "base a=" << seq.base[0] << " b0=" << seq.base[1] << " b1=" << seq.base[2] << "\n";
    for (const auto& st : seq.steps) {
      os << "step kind=" << st.kind;
      if (st.kind == 1)
        os << " a=" << st.a << " b=" << st.b;
      else if (st.kind == 2)
        os << " a=" << st.a;
      else
        os << " b=" << st.b;
      os << " attach=" << st.attach << "\n";
    }
  }
  return os.str();
}

inline BuildSequence parse_build_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  BuildSequence seq;
  bool have_header = false;

  auto fields = [](std::istringstream& ls) {
    std::vector<std::pair<std::string, int>> out;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("build sequence: expected key=value, got '" + tok + "'");
      out.emplace_back(tok.substr(0, eq), std::stoi(tok.substr(eq + 1)));
    }
    return out;
  };
  auto get = [](const std::vector<std::pair<std::string, int>>& fs, const std::string& key) {
    for (const auto& [k, v] : fs)
      if (k == key) return v;
    throw std::invalid_argument("build sequence: missing field '" + key + "'");
  };

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_header) {
      if (head != "R" && head != "S")
        throw std::invalid_argument("build sequence: expected family header");
      seq.family = head[0];
      seq.n = get(fields(ls), "n");
      have_header = true;
    } else if (head == "base") {
      auto fs = fields(ls);
      if (seq.family == 'R')
        seq.base = {get(fs, "a"), get(fs, "b")};
      else
        seq.base = {get(fs, "a"), get(fs, "b0"), get(fs, "b1")};
    } else if (head == "step") {
      auto fs = fields(ls);
      BuildStep st;
      if (seq.family == 'R') {
        st.kind = 0;
        st.a = get(fs, "a");
        st.b = get(fs, "b");
      } else {
        st.kind = get(fs, "kind");
        if (st.kind == 1 || st.kind == 2) st.a = get(fs, "a");
        if (st.kind == 1 || st.kind == 3) st.b = get(fs, "b");
      }
      st.attach = get(fs, "attach");
      seq.steps.push_back(st);
    } else {
      throw std::invalid_argument("build sequence: unexpected line '" + line + "'");
    }
  }
  if (!have_header || seq.base.empty())
    throw std::invalid_argument("build sequence: missing header or base");
  return seq;
}

// Random member of the n/2 family on 2m vertices. Vertices are numbered in
// creation order: step j adds 2j-2 (attached to the chosen target, same
// status) and its pendant partner 2j-1.
inline std::pair<Graph, BuildSequence> generate_R(int m, uint64_t seed) {
  if (m < 1) throw std::invalid_argument("generate_R: needs m >= 1");
  SplitMix64 rng(seed);
  const int n = 2 * m;
  std::vector<std::pair<int, int>> edges;
  std::vector<Status> sta(static_cast<size_t>(n), Status::b);
  sta[0] = Status::a;
  edges.emplace_back(0, 1);

  BuildSequence seq;
  seq.family = 'R';
  seq.n = n;
  seq.base = {0, 1};
  for (int j = 2; j <= m; ++j) {
    int x = 2 * (j - 1);
    int y = x + 1;
    int target = rng.index(2 * (j - 1));
    sta[static_cast<size_t>(x)] = sta[static_cast<size_t>(target)];
    sta[static_cast<size_t>(y)] =
        (sta[static_cast<size_t>(x)] == Status::a) ? Status::b : Status::a;
    edges.emplace_back(x, y);
    edges.emplace_back(target, x);
    BuildStep st;
    st.kind = 0;
    st.attach = target;
    if (sta[static_cast<size_t>(x)] == Status::a) {
      st.a = x;
      st.b = y;
    } else {
      st.a = y;
      st.b = x;
    }
    seq.steps.push_back(st);
  }
  return {Graph::from_edge_list(n, edges), std::move(seq)};
}

// Random member of the n-s family grown from a 3-vertex path by `steps`
// construction stages. Step kinds are drawn uniformly among the kinds that
// currently have a legal target; targets are drawn uniformly by ascending
// vertex id. Kind 1 numbers its inner (status b) vertex before the pendant a.
inline std::pair<Graph, BuildSequence> generate_S(int steps, uint64_t seed) {
  if (steps < 1) throw std::invalid_argument("generate_S: needs step count >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> adj;
  std::vector<Status> sta;
  auto add_vertex = [&](Status s) {
    adj.emplace_back();
    sta.push_back(s);
    return static_cast<int>(adj.size()) - 1;
  };
  auto link = [&](int u, int v) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  };
  auto is_support = [&](int v) {
    for (int w : adj[static_cast<size_t>(v)])
      if (adj[static_cast<size_t>(w)].size() == 1) return true;
    return false;
  };

  int a1 = add_vertex(Status::a);
  int b0 = add_vertex(Status::b);
  int b1 = add_vertex(Status::b);
  link(a1, b0);
  link(b0, b1);

  BuildSequence seq;
  seq.family = 'S';
  seq.base = {a1, b0, b1};

  for (int t = 2; t <= steps; ++t) {
    std::vector<int> b_all, b_support, b_nonsupport;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      if (sta[static_cast<size_t>(v)] != Status::b) continue;
      b_all.push_back(v);
      (is_support(v) ? b_support : b_nonsupport).push_back(v);
    }
    std::vector<int> kinds{1};
    if (!b_nonsupport.empty()) kinds.push_back(2);
    if (!b_support.empty()) kinds.push_back(3);
    int kind = kinds[static_cast<size_t>(rng.index(static_cast<int>(kinds.size())))];

    BuildStep st;
    st.kind = kind;
    if (kind == 1) {
      int target = b_all[static_cast<size_t>(rng.index(static_cast<int>(b_all.size())))];
      int nb = add_vertex(Status::b);
      link(nb, target);
      int na = add_vertex(Status::a);
      link(na, nb);
      st.a = na;
      st.b = nb;
      st.attach = target;
    } else if (kind == 2) {
      int target = b_nonsupport[static_cast<size_t>(rng.index(static_cast<int>(b_nonsupport.size())))];
      int na = add_vertex(Status::a);
      link(na, target);
      st.a = na;
      st.attach = target;
    } else {
      int target = b_support[static_cast<size_t>(rng.index(static_cast<int>(b_support.size())))];
      int nb = add_vertex(Status::b);
      link(nb, target);
      st.b = nb;
      st.attach = target;
    }
    seq.steps.push_back(st);
  }

  seq.n = static_cast<int>(adj.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < seq.n; ++u)
    for (int v : adj[static_cast<size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  return {Graph::from_edge_list(seq.n, edges), std::move(seq)};
}

struct SplitEdgeReport {
  int u = 0, v = 0;    // removed edge
  int n1 = 0, n2 = 0;  // component orders (u side, v side)
  int gamma1 = 0, gamma2 = 0;
  bool additive = false;  // gamma1 + gamma2 == gamma_sp of the whole tree
};

// For a tree with gamma_sp = n/2, removing any edge whose halves' values add
// up to the whole must leave two halves each attaining half their order.
// Reports every edge; a violating additive edge aborts.
inline std::vector<SplitEdgeReport> split_check(const Graph& t, const SolverConfig& cfg = {}) {
  if (!is_tree(t)) throw std::invalid_argument("split_check: input is not a tree");
  if (t.n() % 2 != 0) throw std::invalid_argument("split_check: needs even n");
  const int whole = gamma_sp_exact(t, cfg).gamma_sp;
  if (2 * whole != t.n()) throw std::invalid_argument("split_check: needs gamma_sp = n/2");

  std::vector<SplitEdgeReport> out;
  for (auto [u, v] : t.edges()) {
    // u's side after cutting uv
    VertexSet side(t.n());
    std::vector<int> queue{u};
    side.set(u);
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int w = t.neighbors(x).first(); w != -1; w = t.neighbors(x).next(w)) {
        if ((x == u && w == v) || (x == v && w == u)) continue;
        if (!side.test(w)) {
          side.set(w);
          queue.push_back(w);
        }
      }
    }
    VertexSet other = VertexSet::full(t.n()) - side;
    Graph t1 = detail::induced_subtree(t, side, nullptr);
    Graph t2 = detail::induced_subtree(t, other, nullptr);
    SplitEdgeReport rep;
    rep.u = u;
    rep.v = v;
    rep.n1 = t1.n();
    rep.n2 = t2.n();
    rep.gamma1 = gamma_sp_exact(t1, cfg).gamma_sp;
    rep.gamma2 = gamma_sp_exact(t2, cfg).gamma_sp;
    rep.additive = (rep.gamma1 + rep.gamma2 == whole);
    if (rep.additive && (2 * rep.gamma1 != rep.n1 || 2 * rep.gamma2 != rep.n2)) {
      std::ostringstream os;
      os << "split_check: additive edge (" << u << "," << v << ") with a half off n/2";
      throw std::logic_error(os.str());
    }
    out.push_back(rep);
  }
  return out;
}

// Standard sequence-to-labeled-tree correspondence on n = len+2 vertices,
// repeatedly joining the smallest remaining leaf.
inline Graph tree_from_prufer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(static_cast<size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("tree_from_prufer: entry out of range");
    ++deg[static_cast<size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--deg[static_cast<size_t>(x)] == 1) leaves.push(x);
  }
  int u = leaves.top();
  leaves.pop();
  int v = leaves.top();
  edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace superdom
