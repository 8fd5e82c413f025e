#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

// One private-neighbour witness per vertex outside D: v -> u with
// u in N(v) & D and N(u) contained in D + {v}. Injectivity is forced: a
// shared witness would be adjacent to two outside vertices.
struct SuperDomWitness {
  std::map<int, int> assignment;
};

struct CheckResult {
  SuperDomWitness witness;
  std::vector<int> uncovered;  // outside vertices with no witness
  bool ok() const { return uncovered.empty(); }
};

// Verifies the defining condition vertex by vertex; on success the witness
// maps each outside vertex to its smallest witness.
inline CheckResult check_super_dominating(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.n())
    throw std::invalid_argument("check_super_dominating: set universe mismatch");
  CheckResult res;
  for (int v = 0; v < g.n(); ++v) {
    if (d.test(v)) continue;
    int found = -1;
    for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
      if (!d.test(u)) continue;
      VertexSet spill = g.neighbors(u);
      spill -= d;
      spill.reset(v);
      if (spill.empty()) {
        found = u;
        break;
      }
    }
    if (found >= 0)
      res.witness.assignment.emplace(v, found);
    else
      res.uncovered.push_back(v);
  }
  return res;
}

class SolverTimeout : public std::runtime_error {
 public:
  SolverTimeout() : std::runtime_error("solver: time budget exceeded") {}
};

struct SolverConfig {
  bool deterministic = false;  // return the lexicographically smallest minimum set
  int thread_budget = 1;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct Solution {
  int gamma_sp = 0;
  VertexSet min_set;
  SuperDomWitness witness;
  bool perfect = false;
};

namespace detail {

inline bool perfect_cut(const Graph& g, const VertexSet& d) {
  // cut edges form a perfect matching: every vertex has exactly one
  // neighbor on the other side
  for (int v = 0; v < g.n(); ++v) {
    VertexSet other = g.neighbors(v);
    if (d.test(v))
      other -= d;
    else
      other &= d;
    if (other.count() != 1) return false;
  }
  return true;
}

using Clock = std::chrono::steady_clock;

// DFS for an outside set W of fixed size, scanning candidates in ascending
// order so that dense (heavily constrained) regions are explored first.
//
// Prune rule: every committed outside vertex keeps a nonempty set of still
// viable witnesses u (u not outside, no other outside vertex in N(u)).
class OutsideSearch {
 public:
  OutsideSearch(const Graph& g, int target, std::optional<Clock::time_point> deadline,
                std::function<bool()> abort_check = {})
      : g_(g), n_(g.n()), target_(target), deadline_(deadline),
        abort_check_(std::move(abort_check)), outside_(g.n()), kill_(g.n()), probe_(g.n()) {
    chosen_.reserve(static_cast<size_t>(target));
    viable_.assign(static_cast<size_t>(target),
                   std::vector<VertexSet>(static_cast<size_t>(target), VertexSet(g.n())));
  }

  // Searches for a valid outside set extending `prefix` (ascending, already
  // decided outside) with every further vertex drawn from {floor, ...}, or
  // pinned to start at first_choice >= floor when given. Returns the first
  // valid outside set found.
  std::optional<VertexSet> run(const std::vector<int>& prefix, int floor, int first_choice = -1) {
    while (!chosen_.empty()) pop();
    if (stop_ || interrupted()) return std::nullopt;
    floor_ = floor;
    committed_ = static_cast<int>(prefix.size());
    for (int v : prefix)
      if (!push(v)) return std::nullopt;
    if (static_cast<int>(chosen_.size()) == target_) return outside_;
    bool found = false;
    if (first_choice >= 0) {
      if (push(first_choice)) found = dfs();
    } else {
      found = dfs();
    }
    if (!found || stop_) return std::nullopt;
    return outside_;
  }

  bool timed_out() const { return timed_out_; }

 private:
  // stop_ makes every pending frame bail out, so an interrupt unwinds the
  // whole stack instead of merely failing the current subtree
  bool dfs() {
    if (stop_) return false;
    if (static_cast<int>(chosen_.size()) == target_) return true;
    if (((++nodes_) & 1023) == 0 && interrupted()) {
      stop_ = true;
      return false;
    }
    const int depth = static_cast<int>(chosen_.size());
    const int lo = (depth == committed_) ? floor_ : chosen_.back() + 1;
    const int hi = n_ - (target_ - depth);
    for (int c = lo; c <= hi && !stop_; ++c) {
      if (push(c)) {
        if (dfs()) return true;
      }
      pop();
    }
    return false;
  }

  // Commits c as an outside vertex; false when some committed vertex loses
  // its last viable witness (state is left consistent for pop() either way).
  bool push(int c) {
    const size_t depth = chosen_.size();
    outside_.set(c);
    chosen_.push_back(c);
    auto& cur = viable_[depth];
    kill_ = g_.neighbors(c);
    kill_.set(c);
    bool ok = true;
    for (size_t i = 0; i < depth; ++i) {
      cur[i] = viable_[depth - 1][i];
      cur[i] -= kill_;
      if (cur[i].empty()) ok = false;
    }
    // viable witnesses for the new vertex itself
    VertexSet& mine = cur[depth];
    mine.clear();
    for (int u = g_.neighbors(c).first(); u != -1; u = g_.neighbors(c).next(u)) {
      if (outside_.test(u)) continue;
      probe_ = g_.neighbors(u);
      probe_ &= outside_;
      probe_.reset(c);
      if (probe_.empty()) mine.set(u);
    }
    if (mine.empty()) ok = false;
    return ok;
  }

  void pop() {
    outside_.reset(chosen_.back());
    chosen_.pop_back();
  }

  bool interrupted() {
    if (abort_check_ && abort_check_()) return true;
    if (deadline_ && Clock::now() > *deadline_) {
      timed_out_ = true;
      return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int target_;
  std::optional<Clock::time_point> deadline_;
  std::function<bool()> abort_check_;
  int floor_ = 0;
  int committed_ = 0;
  uint64_t nodes_ = 0;
  bool stop_ = false;
  bool timed_out_ = false;
  std::vector<int> chosen_;
  std::vector<std::vector<VertexSet>> viable_;
  VertexSet outside_;
  VertexSet kill_;
  VertexSet probe_;
};

// Existence of a valid outside set of the given size, splitting the first
// choice across workers; any worker's success cancels the rest, so the
// boolean (and any returned set's validity) is schedule-independent.
inline std::optional<VertexSet> find_any_parallel(const Graph& g, int target, int threads,
                                                  std::optional<Clock::time_point> deadline) {
  const int tasks = g.n() - target + 1;  // first choices 0 .. n-target
  std::atomic<int> next{0};
  std::atomic<bool> someone_found{false};
  std::atomic<bool> timed_out{false};
  std::vector<std::optional<VertexSet>> results(static_cast<size_t>(tasks));
  std::mutex results_mutex;

  auto worker = [&] {
    for (;;) {
      int idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= tasks) return;
      if (timed_out.load(std::memory_order_relaxed) ||
          someone_found.load(std::memory_order_relaxed))
        return;
      auto abort_check = [&] {
        return timed_out.load(std::memory_order_relaxed) ||
               someone_found.load(std::memory_order_relaxed);
      };
      OutsideSearch search(g, target, deadline, abort_check);
      auto res = search.run({}, 0, idx);
      if (search.timed_out()) timed_out.store(true, std::memory_order_relaxed);
      if (res) {
        std::lock_guard<std::mutex> lock(results_mutex);
        results[static_cast<size_t>(idx)] = std::move(res);
        someone_found.store(true, std::memory_order_relaxed);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (timed_out.load()) throw SolverTimeout();

  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

inline std::optional<VertexSet> find_any(const Graph& g, int target, const SolverConfig& cfg,
                                         std::optional<Clock::time_point> deadline) {
  if (cfg.thread_budget <= 1 || target == 0 || g.n() - target + 1 <= 1) {
    OutsideSearch search(g, target, deadline, {});
    auto res = search.run({}, 0);
    if (search.timed_out()) throw SolverTimeout();
    return res;
  }
  return find_any_parallel(g, target, cfg.thread_budget, deadline);
}

// Lexicographically largest valid outside set of the given size (assumed to
// exist), equivalently the complement of the lexicographically smallest
// super dominating set of size n - target. Built greedily: walk the vertices
// in order, keep each one inside D whenever a feasibility probe over the
// remaining suffix still succeeds, otherwise force it outside.
inline VertexSet lex_max_outside(const Graph& g, int target,
                                 std::optional<Clock::time_point> deadline) {
  std::vector<int> forced;
  OutsideSearch search(g, target, deadline, {});
  for (int v = 0; v < g.n() && static_cast<int>(forced.size()) < target; ++v) {
    auto res = search.run(forced, v + 1);
    if (search.timed_out()) throw SolverTimeout();
    if (!res) forced.push_back(v);
  }
  if (static_cast<int>(forced.size()) != target)
    throw std::logic_error("lex_max_outside: refinement lost feasibility");
  VertexSet w(g.n());
  for (int v : forced) w.set(v);
  return w;
}

}  // namespace detail

// Exact super domination number. Searches over the outside side V-D, whose
// size is at most floor(n/2), from largest outside size downward; the first
// size that admits a valid outside set yields a minimum D.
inline Solution gamma_sp_exact(const Graph& g, const SolverConfig& cfg = {}) {
  if (cfg.thread_budget < 1)
    throw std::invalid_argument("gamma_sp_exact: thread_budget must be >= 1");
  const int n = g.n();
  std::optional<detail::Clock::time_point> deadline;
  if (cfg.time_budget) deadline = detail::Clock::now() + *cfg.time_budget;

  if (n == 0) return Solution{0, VertexSet(0), {}, true};

  for (int outside = n / 2; outside >= 1; --outside) {
    auto w = detail::find_any(g, outside, cfg, deadline);
    if (!w) continue;
    if (cfg.deterministic) w = detail::lex_max_outside(g, outside, deadline);
    VertexSet d = VertexSet::full(n) - *w;
    auto chk = check_super_dominating(g, d);
    return Solution{n - outside, d, std::move(chk.witness), detail::perfect_cut(g, d)};
  }
  // outside size 0 always works: D = V(G)
  VertexSet d = VertexSet::full(n);
  return Solution{n, d, {}, detail::perfect_cut(g, d)};
}

// Perfect set test per the matching definition; demands a super dominating
// input.
inline bool is_perfect_set(const Graph& g, const VertexSet& d) {
  if (!check_super_dominating(g, d).ok())
    throw std::invalid_argument("is_perfect_set: set is not super dominating");
  return detail::perfect_cut(g, d);
}

// Every super dominating set of minimum size, ascending lexicographically.
inline std::vector<VertexSet> all_minimum_sets(const Graph& g) {
  constexpr int kCap = 20;
  const int n = g.n();
  if (n > kCap) throw std::invalid_argument("all_minimum_sets: n exceeds enumeration cap (20)");
  const int k = gamma_sp_exact(g).gamma_sp;
  std::vector<VertexSet> out;
  std::vector<int> comb(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
  for (;;) {
    VertexSet d(n);
    for (int v : comb) d.set(v);
    if (check_super_dominating(g, d).ok()) out.push_back(d);
    int i = k - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace superdom
