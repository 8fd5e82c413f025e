#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superdom/vertex_set.hpp"

namespace superdom {

// Immutable simple graph on vertices 0..n-1. Adjacency is one VertexSet row
// per vertex; rows are symmetric and loop-free by construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    n_ = n;
    adj_.assign(static_cast<size_t>(n), VertexSet(n));
  }

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      g.adj_[static_cast<size_t>(u)].set(v);
      g.adj_[static_cast<size_t>(v)].set(u);
    }
    g.recount();
    return g;
  }

  int n() const { return n_; }
  int q() const { return q_; }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  int degree(int v) const { return neighbors(v).count(); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    return neighbors(u).test(v);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(q_));
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[static_cast<size_t>(u)].next(u); v != -1;
           v = adj_[static_cast<size_t>(u)].next(v))
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  friend Graph complement(const Graph& g);

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  void recount() {
    int total = 0;
    for (const auto& row : adj_) total += row.count();
    q_ = total / 2;
  }

  int n_ = 0;
  int q_ = 0;
  std::vector<VertexSet> adj_;
};

inline Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int v = 0; v < g.n(); ++v) {
    c.adj_[static_cast<size_t>(v)] = VertexSet::full(g.n()) - g.neighbors(v);
    c.adj_[static_cast<size_t>(v)].reset(v);
  }
  c.recount();
  return c;
}

// BFS distances from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.n()) throw std::out_of_range("bfs_distances: vertex out of range");
  std::vector<int> dist(static_cast<size_t>(g.n()), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(g.n()));
  dist[static_cast<size_t>(src)] = 0;
  queue.push_back(src);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next(w)) {
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  for (int d : dist)
    if (d == -1) return false;
  return true;
}

// Maximum BFS distance over all pairs; nullopt when disconnected, 0 for n<=1.
inline std::optional<int> diameter(const Graph& g) {
  if (g.n() <= 1) return 0;
  int best = 0;
  for (int v = 0; v < g.n(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d == -1) return std::nullopt;
      if (d > best) best = d;
    }
  }
  return best;
}

// Vertices of degree exactly 1.
inline VertexSet end_vertices(const Graph& g) {
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) out.set(v);
  return out;
}

struct SupportInfo {
  VertexSet supports;         // vertices with at least one end-vertex neighbor
  VertexSet strong_supports;  // vertices with at least two end-vertex neighbors
};

inline SupportInfo support_vertices(const Graph& g) {
  SupportInfo info{VertexSet(g.n()), VertexSet(g.n())};
  VertexSet ends = end_vertices(g);
  for (int v = 0; v < g.n(); ++v) {
    int leafy = (g.neighbors(v) & ends).count();
    if (leafy >= 1) info.supports.set(v);
    if (leafy >= 2) info.strong_supports.set(v);
  }
  return info;
}

// True when every vertex u != v is adjacent to v or shares a neighbor with v.
// The quantifier deliberately excludes u == v.
inline bool is_semi_universal(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("is_semi_universal: vertex out of range");
  const VertexSet& nv = g.neighbors(v);
  for (int u = 0; u < g.n(); ++u) {
    if (u == v) continue;
    if (nv.test(u)) continue;
    if (!g.neighbors(u).intersects(nv)) return false;
  }
  return true;
}

inline bool is_tree(const Graph& g) {
  return g.n() >= 1 && g.q() == g.n() - 1 && is_connected(g);
}

// Two-colors each component; optionally reports the color classes.
inline bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr) {
  std::vector<int> color(static_cast<size_t>(g.n()), -1);
  std::vector<int> queue;
  for (int s = 0; s < g.n(); ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next(w)) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
          queue.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

}  // namespace superdom
