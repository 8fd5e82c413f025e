// superdom: exact super domination number toolkit.
//
// Subcommands: solve, bounds, tree, generate, verify. Inputs are graph6
// records (one per line) or edge-list text; records stream through one at a
// time and output order always matches input order.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "superdom/superdom.hpp"

namespace sd = superdom;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExactCap = 64;
constexpr int kOracleCap = 20;

// exit codes: 0 all records ok, 2 parse/record errors, 3 solver cap or
// time budget exceeded (3 wins when both occur)
struct ExitTracker {
  bool record_error = false;
  bool cap_error = false;
  int code() const { return cap_error ? 3 : (record_error ? 2 : 0); }
};

struct CommonOpts {
  std::string input = "-";
  std::string format = "graph6";
  std::string out = "text";
  bool deterministic = false;
  int threads = 0;  // 0: fall back to SUPERDOM_THREADS, then 1
  std::optional<uint64_t> seed;
  bool cap_override = false;
  bool use_oracle = false;

  int resolved_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("SUPERDOM_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 1;
  }

  sd::SolverConfig solver_config() const {
    sd::SolverConfig cfg;
    cfg.deterministic = deterministic;
    cfg.thread_budget = resolved_threads();
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_solver_flags = true) {
  cmd->add_option("input", o.input, "input path, or - for stdin");
  cmd->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  if (with_solver_flags) {
    cmd->add_flag("--deterministic", o.deterministic,
                  "lexicographically smallest results, byte-stable output");
    cmd->add_option("--threads", o.threads, "solver thread budget (default SUPERDOM_THREADS or 1)");
    cmd->add_option("--seed", o.seed, "seed echoed into output records");
    cmd->add_flag("--cap-override", o.cap_override, "allow n > 64 on the exact path");
    cmd->add_flag("--oracle", o.use_oracle, "use the brute-force path (n <= 20)");
  }
}

// Streams records from an input, invoking fn(index, graph, error) with
// exactly one of graph/error set. Edge-list streams cannot resync after a
// malformed record, so the remainder is dropped after reporting.
template <typename F>
void for_each_record(std::istream& in, const std::string& format, F&& fn) {
  int index = 0;
  if (format == "graph6") {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        fn(index, std::optional<sd::Graph>(sd::parse_graph6(line)), std::string{});
      } catch (const sd::FormatError& e) {
        fn(index, std::optional<sd::Graph>{}, std::string(e.what()));
      }
      ++index;
    }
  } else {
    sd::EdgeListReader reader(in);
    for (;;) {
      try {
        auto g = reader.next();
        if (!g) return;
        fn(index, std::move(g), std::string{});
      } catch (const sd::FormatError& e) {
        fn(index, std::optional<sd::Graph>{}, std::string(e.what()));
        return;
      }
      ++index;
    }
  }
}

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("input", "cannot open '" + path + "'");
  return f;
}

template <typename F>
void with_input(const CommonOpts& o, F&& fn) {
  if (o.input == "-") {
    fn(std::cin);
  } else {
    auto f = open_file(o.input);
    fn(f);
  }
}

std::string join_ints(const std::vector<int>& xs, char sep = ';') {
  std::string s;
  for (int x : xs) {
    if (!s.empty()) s += sep;
    s += std::to_string(x);
  }
  return s;
}

std::string join_witness(const sd::SuperDomWitness& w) {
  std::string s;
  for (auto [v, u] : w.assignment) {
    if (!s.empty()) s += ';';
    s += std::to_string(v) + "->" + std::to_string(u);
  }
  return s;
}

ordered_json witness_json(const sd::SuperDomWitness& w) {
  ordered_json arr = ordered_json::array();
  for (auto [v, u] : w.assignment) arr.push_back({v, u});
  return arr;
}

// Deterministic output is byte-stable across thread budgets, so the budget
// (which cannot affect results under the flag) is not echoed there.
void echo_config(ordered_json& rec, const CommonOpts& o) {
  rec["deterministic"] = o.deterministic;
  if (!o.deterministic) rec["threads"] = o.resolved_threads();
  if (o.seed) rec["seed"] = *o.seed;
}

// Caps: the oracle refuses n > 20 outright; the exact path refuses n > 64
// unless --cap-override is given.
std::optional<std::string> cap_problem(const CommonOpts& o, int n) {
  if (o.use_oracle && n > kOracleCap)
    return "solver cap exceeded: oracle accepts n <= " + std::to_string(kOracleCap);
  if (!o.use_oracle && n > kExactCap && !o.cap_override)
    return "solver cap exceeded: exact path accepts n <= " + std::to_string(kExactCap) +
           " (use --cap-override)";
  return std::nullopt;
}

void print_error_record(const CommonOpts& o, int id, const std::string& err, int csv_columns) {
  if (o.out == "json") {
    ordered_json rec;
    rec["id"] = id;
    rec["error"] = err;
    std::cout << rec.dump() << "\n";
  } else if (o.out == "csv") {
    std::cout << id;
    for (int i = 0; i < csv_columns - 2; ++i) std::cout << ',';
    std::cout << ",\"" << err << "\"\n";
  } else {
    std::cout << "record " << id << " error: " << err << "\n";
  }
}

// ---------------------------------------------------------------- solve ----

int run_solve(const CommonOpts& o) {
  ExitTracker exit_state;
  constexpr int kCsvCols = 10;
  if (o.out == "csv")
    std::cout << "id,n,q,gamma_sp,min_set,witness,perfect,family_R,family_S,error\n";
  with_input(o, [&](std::istream& in) {
    for_each_record(in, o.format, [&](int id, std::optional<sd::Graph> g, std::string err) {
      if (!g) {
        exit_state.record_error = true;
        print_error_record(o, id, err, kCsvCols);
        return;
      }
      if (auto cap = cap_problem(o, g->n())) {
        exit_state.cap_error = true;
        print_error_record(o, id, *cap, kCsvCols);
        return;
      }
      auto t0 = std::chrono::steady_clock::now();
      sd::Solution sol;
      std::optional<sd::BoundReport> rep;
      std::optional<sd::NordhausGaddum> ng;
      std::optional<bool> fam_r, fam_s;
      try {
        if (o.use_oracle) {
          // brute-force path: the record stays lean rather than mixing in
          // search-solver results
          sol = sd::gamma_sp_oracle(*g);
        } else {
          auto cfg = o.solver_config();
          sol = sd::gamma_sp_exact(*g, cfg);
          rep = sd::bound_report(*g, cfg);
          ng = sd::nordhaus_gaddum(*g, cfg);
          if (sd::is_tree(*g)) {
            if (g->n() >= 2) fam_r = (g->n() % 2 == 0) && sd::is_family_R(*g, cfg);
            if (g->n() >= 3) fam_s = sd::is_family_S(*g, cfg);
          }
        }
      } catch (const sd::SolverTimeout& e) {
        exit_state.cap_error = true;
        print_error_record(o, id, e.what(), kCsvCols);
        return;
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

      if (o.out == "json") {
        ordered_json rec;
        rec["id"] = id;
        rec["n"] = g->n();
        rec["q"] = g->q();
        rec["gamma_sp"] = sol.gamma_sp;
        rec["min_set"] = sol.min_set.members();
        rec["witness"] = witness_json(sol.witness);
        rec["perfect"] = sol.perfect;
        if (rep) {
          ordered_json b;
          b["lower_half"] = rep->lower_half;
          b["edge_lower"] = rep->edge_lower;
          b["diameter_upper"] = rep->diameter_upper ? ordered_json(*rep->diameter_upper) : ordered_json(nullptr);
          b["edge_upper"] = rep->edge_upper ? ordered_json(*rep->edge_upper) : ordered_json(nullptr);
          b["trivial_upper"] = rep->trivial_upper;
          b["nordhaus_gaddum_sum"] = ng->sum;
          ordered_json tags = ordered_json::array();
          for (auto t : rep->attained) tags.push_back(sd::bound_tag_name(t));
          b["attained"] = tags;
          rec["bounds"] = b;
        } else {
          rec["bounds"] = nullptr;
        }
        rec["family_R"] = fam_r ? ordered_json(*fam_r) : ordered_json(nullptr);
        rec["family_S"] = fam_s ? ordered_json(*fam_s) : ordered_json(nullptr);
        rec["solver"] = o.use_oracle ? "oracle" : "exact";
        echo_config(rec, o);
        if (!o.deterministic) rec["elapsed_ms"] = ms;
        std::cout << rec.dump() << "\n";
      } else if (o.out == "csv") {
        auto opt_bool = [](const std::optional<bool>& b) {
          return b ? (*b ? std::string("true") : std::string("false")) : std::string();
        };
        std::cout << id << ',' << g->n() << ',' << g->q() << ',' << sol.gamma_sp << ','
                  << join_ints(sol.min_set.members()) << ',' << join_witness(sol.witness) << ','
                  << (sol.perfect ? "true" : "false") << ',' << opt_bool(fam_r) << ','
                  << opt_bool(fam_s) << ",\n";
      } else {
        std::cout << "id=" << id << " n=" << g->n() << " q=" << g->q()
                  << " gamma_sp=" << sol.gamma_sp << " min_set=" << sol.min_set.to_string()
                  << " witness=" << (sol.witness.assignment.empty() ? "{}" : join_witness(sol.witness))
                  << " perfect=" << (sol.perfect ? "true" : "false");
        if (rep) {
          std::cout << " attained=[";
          for (size_t i = 0; i < rep->attained.size(); ++i)
            std::cout << (i ? "," : "") << sd::bound_tag_name(rep->attained[i]);
          std::cout << "]";
        }
        if (fam_r) std::cout << " family_R=" << (*fam_r ? "true" : "false");
        if (fam_s) std::cout << " family_S=" << (*fam_s ? "true" : "false");
        if (!o.deterministic) std::cout << " elapsed_ms=" << ms;
        std::cout << "\n";
      }
    });
  });
  return exit_state.code();
}

// --------------------------------------------------------------- bounds ----

int run_bounds(const CommonOpts& o) {
  ExitTracker exit_state;
  constexpr int kCsvCols = 14;
  if (o.out == "csv")
    std::cout << "id,n,q,connected,gamma_sp,lower_half,edge_lower,diameter_upper,edge_upper,"
                 "trivial_upper,ng_sum,ng_in_range,attained,error\n";
  with_input(o, [&](std::istream& in) {
    for_each_record(in, o.format, [&](int id, std::optional<sd::Graph> g, std::string err) {
      if (!g) {
        exit_state.record_error = true;
        print_error_record(o, id, err, kCsvCols);
        return;
      }
      if (auto cap = cap_problem(o, g->n())) {
        exit_state.cap_error = true;
        print_error_record(o, id, *cap, kCsvCols);
        return;
      }
      sd::BoundReport rep;
      sd::NordhausGaddum ng;
      try {
        rep = sd::bound_report(*g, o.solver_config());
        ng = sd::nordhaus_gaddum(*g, o.solver_config());
      } catch (const sd::SolverTimeout& e) {
        exit_state.cap_error = true;
        print_error_record(o, id, e.what(), kCsvCols);
        return;
      }
      std::vector<std::string> tags;
      for (auto t : rep.attained) tags.emplace_back(sd::bound_tag_name(t));

      if (o.out == "json") {
        ordered_json rec;
        rec["id"] = id;
        rec["n"] = rep.n;
        rec["q"] = rep.q;
        rec["connected"] = rep.connected;
        rec["gamma_sp"] = rep.gamma_sp;
        rec["lower_half"] = rep.lower_half;
        rec["edge_lower"] = rep.edge_lower;
        rec["diameter_upper"] = rep.diameter_upper ? ordered_json(*rep.diameter_upper) : ordered_json(nullptr);
        rec["edge_upper"] = rep.edge_upper ? ordered_json(*rep.edge_upper) : ordered_json(nullptr);
        rec["trivial_upper"] = rep.trivial_upper;
        rec["nordhaus_gaddum_sum"] = ng.sum;
        rec["nordhaus_gaddum_in_range"] = ng.in_range;
        rec["attained"] = tags;
        echo_config(rec, o);
        std::cout << rec.dump() << "\n";
      } else if (o.out == "csv") {
        std::cout << id << ',' << rep.n << ',' << rep.q << ',' << (rep.connected ? "true" : "false")
                  << ',' << rep.gamma_sp << ',' << rep.lower_half << ',' << rep.edge_lower << ',';
        if (rep.diameter_upper) std::cout << *rep.diameter_upper;
        std::cout << ',';
        if (rep.edge_upper) std::cout << *rep.edge_upper;
        std::cout << ',' << rep.trivial_upper << ',' << ng.sum << ','
                  << (ng.in_range ? "true" : "false") << ',';
        std::string joined;
        for (const auto& t : tags) {
          if (!joined.empty()) joined += ';';
          joined += t;
        }
        std::cout << joined << ",\n";
      } else {
        std::cout << "id=" << id << " n=" << rep.n << " q=" << rep.q
                  << " connected=" << (rep.connected ? "true" : "false")
                  << " gamma_sp=" << rep.gamma_sp << " lower_half=" << rep.lower_half
                  << " edge_lower=" << rep.edge_lower << " diameter_upper=";
        if (rep.diameter_upper)
          std::cout << *rep.diameter_upper;
        else
          std::cout << "n/a";
        std::cout << " edge_upper=";
        if (rep.edge_upper)
          std::cout << *rep.edge_upper;
        else
          std::cout << "n/a";
        std::cout << " trivial_upper=" << rep.trivial_upper << " ng_sum=" << ng.sum
                  << " attained=[";
        for (size_t i = 0; i < tags.size(); ++i) std::cout << (i ? "," : "") << tags[i];
        std::cout << "]\n";
      }
    });
  });
  return exit_state.code();
}

// ----------------------------------------------------------------- tree ----

int run_tree(const CommonOpts& o, bool sequences) {
  ExitTracker exit_state;
  constexpr int kCsvCols = 10;
  if (o.out == "csv") std::cout << "id,n,q,s,lower,upper,gamma_sp,family_R,family_S,error\n";
  with_input(o, [&](std::istream& in) {
    for_each_record(in, o.format, [&](int id, std::optional<sd::Graph> g, std::string err) {
      if (!g) {
        exit_state.record_error = true;
        print_error_record(o, id, err, kCsvCols);
        return;
      }
      if (!sd::is_tree(*g)) {
        exit_state.record_error = true;
        print_error_record(o, id, "not a tree", kCsvCols);
        return;
      }
      if (auto cap = cap_problem(o, g->n())) {
        exit_state.cap_error = true;
        print_error_record(o, id, *cap, kCsvCols);
        return;
      }
      const int n = g->n();
      auto cfg = o.solver_config();
      auto meta = sd::tree_meta(*g);
      int gamma = sd::gamma_sp_exact(*g, cfg).gamma_sp;
      std::optional<std::pair<int, int>> bounds;
      if (n >= 3) bounds = sd::tree_bounds(*g);
      std::optional<bool> in_r, in_s;
      std::optional<sd::Decomposition> dec_r, dec_s;
      if (n >= 2 && n % 2 == 0) {
        dec_r = sd::decompose_R(*g);
        in_r = sd::is_family_R(*g, cfg);
      } else if (n >= 2) {
        in_r = false;
      }
      if (n >= 3) {
        dec_s = sd::decompose_S(*g);
        in_s = sd::is_family_S(*g, cfg);
      }

      if (o.out == "json") {
        ordered_json rec;
        rec["id"] = id;
        rec["n"] = n;
        rec["q"] = g->q();
        rec["s"] = meta.support_count;
        rec["lower"] = bounds ? ordered_json(bounds->first) : ordered_json(nullptr);
        rec["upper"] = bounds ? ordered_json(bounds->second) : ordered_json(nullptr);
        rec["gamma_sp"] = gamma;
        rec["family_R"] = in_r ? ordered_json(*in_r) : ordered_json(nullptr);
        rec["family_S"] = in_s ? ordered_json(*in_s) : ordered_json(nullptr);
        if (sequences) {
          rec["sequence_R"] = dec_r ? ordered_json(sd::serialize(dec_r->sequence)) : ordered_json(nullptr);
          rec["sequence_S"] = dec_s ? ordered_json(sd::serialize(dec_s->sequence)) : ordered_json(nullptr);
        }
        echo_config(rec, o);
        std::cout << rec.dump() << "\n";
      } else if (o.out == "csv") {
        auto opt_bool = [](const std::optional<bool>& b) {
          return b ? (*b ? std::string("true") : std::string("false")) : std::string();
        };
        std::cout << id << ',' << n << ',' << g->q() << ',' << meta.support_count << ',';
        if (bounds) std::cout << bounds->first;
        std::cout << ',';
        if (bounds) std::cout << bounds->second;
        std::cout << ',' << gamma << ',' << opt_bool(in_r) << ',' << opt_bool(in_s) << ",\n";
      } else {
        std::cout << "id=" << id << " n=" << n << " q=" << g->q() << " s=" << meta.support_count;
        if (bounds) std::cout << " lower=" << bounds->first << " upper=" << bounds->second;
        std::cout << " gamma_sp=" << gamma;
        if (in_r) std::cout << " family_R=" << (*in_r ? "true" : "false");
        if (in_s) std::cout << " family_S=" << (*in_s ? "true" : "false");
        std::cout << "\n";
        if (sequences && dec_r) std::cout << sd::serialize(dec_r->sequence);
        if (sequences && dec_s) std::cout << sd::serialize(dec_s->sequence);
      }
    });
  });
  return exit_state.code();
}

// ------------------------------------------------------------- generate ----

struct GenerateOpts {
  std::string family;  // R or S
  std::string kind;    // standard kind name
  int size = 0;
  int size2 = 0;
  uint64_t seed = 1;
  int count = 1;
  std::string sequence_dir;
};

int run_generate(const GenerateOpts& g) {
  if (g.family.empty() == g.kind.empty())
    throw CLI::ValidationError("generate", "give exactly one of --family and --kind");
  if (!g.sequence_dir.empty()) std::filesystem::create_directories(g.sequence_dir);

  for (int i = 0; i < g.count; ++i) {
    uint64_t seed = g.seed + static_cast<uint64_t>(i);
    sd::Graph graph;
    std::optional<sd::BuildSequence> seq;
    if (g.family == "R") {
      auto [t, s] = sd::generate_R(g.size, seed);
      graph = std::move(t);
      seq = std::move(s);
    } else if (g.family == "S") {
      auto [t, s] = sd::generate_S(g.size, seed);
      graph = std::move(t);
      seq = std::move(s);
    } else if (!g.family.empty()) {
      throw CLI::ValidationError("generate", "--family must be R or S");
    } else {
      sd::GraphKind kind;
      if (g.kind == "path") kind = sd::GraphKind::path(g.size);
      else if (g.kind == "cycle") kind = sd::GraphKind::cycle(g.size);
      else if (g.kind == "complete") kind = sd::GraphKind::complete(g.size);
      else if (g.kind == "star") kind = sd::GraphKind::star(g.size);
      else if (g.kind == "complete-bipartite") kind = sd::GraphKind::complete_bipartite(g.size, g.size2);
      else if (g.kind == "empty") kind = sd::GraphKind::empty(g.size);
      else if (g.kind == "friendship") kind = sd::GraphKind::friendship(g.size);
      else throw CLI::ValidationError("generate", "unknown --kind '" + g.kind + "'");
      graph = sd::generate_standard(kind);
    }
    std::cout << sd::emit_graph6(graph) << "\n";
    if (seq && !g.sequence_dir.empty()) {
      std::ostringstream name;
      name << "seq-" << std::setw(4) << std::setfill('0') << i << ".txt";
      std::ofstream f(std::filesystem::path(g.sequence_dir) / name.str());
      f << sd::serialize(*seq);
    }
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

int run_verify(const CommonOpts& o, const std::string& set_arg) {
  ExitTracker exit_state;
  std::vector<int> set_members;
  {
    std::stringstream ss(set_arg);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) set_members.push_back(std::stoi(item));
  }
  constexpr int kCsvCols = 8;
  if (o.out == "csv") std::cout << "id,n,q,set,ok,witness,uncovered,error\n";
  with_input(o, [&](std::istream& in) {
    for_each_record(in, o.format, [&](int id, std::optional<sd::Graph> g, std::string err) {
      if (!g) {
        exit_state.record_error = true;
        print_error_record(o, id, err, kCsvCols);
        return;
      }
      sd::VertexSet d(g->n());
      try {
        for (int v : set_members) d.set(v);
      } catch (const std::out_of_range&) {
        exit_state.record_error = true;
        print_error_record(o, id, "set vertex out of range", kCsvCols);
        return;
      }
      auto chk = sd::check_super_dominating(*g, d);

      if (o.out == "json") {
        ordered_json rec;
        rec["id"] = id;
        rec["n"] = g->n();
        rec["q"] = g->q();
        rec["set"] = d.members();
        rec["ok"] = chk.ok();
        rec["witness"] = witness_json(chk.witness);
        rec["uncovered"] = chk.uncovered;
        std::cout << rec.dump() << "\n";
      } else if (o.out == "csv") {
        std::cout << id << ',' << g->n() << ',' << g->q() << ',' << join_ints(d.members()) << ','
                  << (chk.ok() ? "true" : "false") << ',' << join_witness(chk.witness) << ','
                  << join_ints(chk.uncovered) << ",\n";
      } else {
        std::cout << "id=" << id << " set=" << d.to_string();
        if (chk.ok())
          std::cout << " ok witness=" << (chk.witness.assignment.empty() ? "{}" : join_witness(chk.witness)) << "\n";
        else
          std::cout << " NOT super dominating, uncovered=" << join_ints(chk.uncovered) << "\n";
      }
    });
  });
  return exit_state.code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact super domination number toolkit"};
  app.require_subcommand(1);

  CommonOpts solve_opts, bounds_opts, tree_opts, verify_opts;
  GenerateOpts gen_opts;
  bool tree_sequences = false;
  std::string verify_set;

  auto* solve_cmd = app.add_subcommand("solve", "compute gamma_sp per record");
  add_common(solve_cmd, solve_opts);

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound per record");
  add_common(bounds_cmd, bounds_opts);

  auto* tree_cmd = app.add_subcommand("tree", "tree bounds and extremal family analysis");
  add_common(tree_cmd, tree_opts);
  tree_cmd->add_flag("--sequences", tree_sequences, "emit build sequences for family members");

  auto* gen_cmd = app.add_subcommand("generate", "emit graph6 records for generated graphs");
  gen_cmd->add_option("--family", gen_opts.family, "extremal tree family: R or S");
  gen_cmd->add_option("--kind", gen_opts.kind,
                      "standard kind: path|cycle|complete|star|complete-bipartite|empty|friendship");
  gen_cmd->add_option("--size", gen_opts.size, "size parameter (R: pair count; S: step count)")
      ->required();
  gen_cmd->add_option("--size2", gen_opts.size2, "second part size for complete-bipartite");
  gen_cmd->add_option("--seed", gen_opts.seed, "seed; record i uses seed+i")->capture_default_str();
  gen_cmd->add_option("--count", gen_opts.count, "number of records")->capture_default_str();
  gen_cmd->add_option("--sequence-dir", gen_opts.sequence_dir,
                      "write build-sequence sidecar files into this directory");

  auto* verify_cmd = app.add_subcommand("verify", "check a vertex set per record");
  add_common(verify_cmd, verify_opts, false);
  verify_cmd->add_option("--set", verify_set, "comma-separated vertex list")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (bounds_cmd->parsed()) return run_bounds(bounds_opts);
    if (tree_cmd->parsed()) return run_tree(tree_opts, tree_sequences);
    if (gen_cmd->parsed()) return run_generate(gen_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts, verify_set);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
