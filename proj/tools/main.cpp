// Command line front end: solve genus vertex deletion instances, compute
// graph genus, run the scheme-enumeration oracle, enumerate nice boundaried
// embeddings, and generate benchmark graphs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gvd/boundaried.hpp"
#include "gvd/dp.hpp"
#include "gvd/flags.hpp"
#include "gvd/generators.hpp"
#include "gvd/graph.hpp"
#include "gvd/nicify.hpp"
#include "gvd/oracle.hpp"
#include "gvd/treedecomp.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

gvd::TreeDecomposition load_td(const std::string& td_path, const gvd::Graph& g) {
  if (td_path.empty()) return gvd::heuristic_td(g);
  return gvd::parse_td(read_file(td_path), g);
}

void print_solve_stats(const gvd::SolveStats& st) {
  std::cerr << "stats: width=" << st.width << " nodes=" << st.node_count
            << " cells=" << st.table_cells
            << " max_node_cells=" << st.max_node_cells
            << " merge_candidates=" << st.merge_candidates << " time="
            << st.seconds << "s\n";
}

int run(int argc, char** argv) {
  CLI::App app{"genus vertex deletion solver over flag-system embeddings"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand(
      "solve", "decide whether deleting at most k vertices reaches euler genus at most g");
  std::string s_graph, s_td;
  int s_genus = 0, s_budget = 0, s_threads = 1;
  bool s_orientable = false, s_witness = false, s_json = false;
  bool s_prune = false, s_no_verify = false;
  double s_time = 0;
  long long s_cells = 1000000;
  solve_cmd->add_option("--graph", s_graph, "graph file, '-' for stdin")->required();
  solve_cmd->add_option("--td", s_td, "tree decomposition file; min-fill heuristic when absent");
  solve_cmd->add_option("-g,--genus", s_genus, "euler genus bound")->required()
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("-k,--budget", s_budget, "deletion budget")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--orientable", s_orientable, "count only orientable embeddings");
  solve_cmd->add_flag("--emit-witness", s_witness, "print a smallest deletion set");
  solve_cmd->add_flag("--json", s_json, "machine readable result on stdout");
  solve_cmd->add_flag("--prune", s_prune, "discard table cells already over the budget");
  solve_cmd->add_flag("--no-verify", s_no_verify, "skip independent witness verification");
  solve_cmd->add_option("--threads", s_threads, "worker threads for merges")
      ->envname("GVD_THREADS")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--time-limit", s_time, "wall clock limit in seconds, 0 = none")
      ->envname("GVD_TIME_LIMIT");
  solve_cmd->add_option("--max-cells", s_cells, "abort beyond this many table cells")
      ->envname("GVD_MAX_CELLS");

  // genus
  auto* genus_cmd = app.add_subcommand(
      "genus", "euler genus of a graph (zero-budget runs with growing bound) or of an embedding file");
  std::string g_graph, g_td, g_embedding;
  int g_threads = 1;
  bool g_orientable = false, g_json = false;
  genus_cmd->add_option("--graph", g_graph, "graph file, '-' for stdin");
  genus_cmd->add_option("--td", g_td, "tree decomposition file");
  genus_cmd->add_option("--embedding", g_embedding, "embedding file; prints its euler genus");
  genus_cmd->add_flag("--orientable", g_orientable, "restrict to orientable embeddings");
  genus_cmd->add_flag("--json", g_json, "machine readable result on stdout");
  genus_cmd->add_option("--threads", g_threads)->envname("GVD_THREADS")
      ->check(CLI::PositiveNumber);

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "scheme-enumeration oracle: exact genus, or smallest deletion set when -k is given");
  std::string o_graph;
  int o_genus = 0, o_budget = -1, o_threads = 1;
  long long o_schemes = 200000000;
  bool o_orientable = false, o_all_sig = false, o_json = false;
  oracle_cmd->add_option("--graph", o_graph, "graph file, '-' for stdin")->required();
  oracle_cmd->add_option("-g,--genus", o_genus, "genus bound for the deletion question")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("-k,--budget", o_budget, "deletion budget; omit to print the genus");
  oracle_cmd->add_flag("--orientable", o_orientable, "restrict to orientable schemes");
  oracle_cmd->add_flag("--all-signatures", o_all_sig,
                       "enumerate every edge signature instead of pinning a spanning forest");
  oracle_cmd->add_flag("--json", o_json, "machine readable result on stdout");
  oracle_cmd->add_option("--max-schemes", o_schemes, "abort beyond this many schemes")
      ->envname("GVD_MAX_SCHEMES");
  oracle_cmd->add_option("--threads", o_threads)->envname("GVD_THREADS")
      ->check(CLI::PositiveNumber);

  // enumerate-nice
  auto* enum_cmd = app.add_subcommand(
      "enumerate-nice", "all nice boundaried embeddings for a label capacity and genus bound");
  int e_labels = 0, e_genus = 0, e_max_flags = -1;
  long long e_states = 5000000;
  bool e_orientable = false, e_print = false, e_json = false;
  enum_cmd->add_option("-t,--labels", e_labels, "label capacity")->required()
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("-g,--genus", e_genus, "euler genus bound")->required()
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--orientable", e_orientable, "orientable embeddings only");
  enum_cmd->add_flag("--print", e_print, "print each embedding, not just the count");
  enum_cmd->add_flag("--json", e_json, "machine readable result on stdout");
  enum_cmd->add_option("--max-flags", e_max_flags, "override the flag-count bound")
      ->envname("GVD_MAX_FLAGS");
  enum_cmd->add_option("--max-states", e_states, "abort beyond this many explored embeddings")
      ->envname("GVD_MAX_STATES");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a benchmark graph");
  std::string gen_kind, gen_out;
  std::vector<long long> gen_args;
  gen_cmd->add_option("kind", gen_kind,
                      "complete N | bipartite A B | grid R C | wall S | b-ell L | random N M SEED")
      ->required();
  gen_cmd->add_option("args", gen_args, "numeric arguments for the kind");
  gen_cmd->add_option("-o,--output", gen_out, "output file, stdout when absent");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(solve_cmd)) {
    gvd::Graph g = gvd::parse_graph(read_file(s_graph));
    gvd::TreeDecomposition td = load_td(s_td, g);
    gvd::SolveOptions opts;
    opts.genus_bound = s_genus;
    opts.budget = s_budget;
    opts.orientable = s_orientable;
    opts.threads = s_threads;
    opts.prune_budget = s_prune;
    opts.verify_witness = !s_no_verify;
    opts.time_limit_seconds = s_time;
    opts.max_table_cells = s_cells;
    gvd::SolveResult r = gvd::solve(g, td, opts);
    if (r.timed_out) {
      std::cerr << "error: resource limit exceeded before an answer was reached\n";
      return 2;
    }
    print_solve_stats(r.stats);
    if (s_json) {
      nlohmann::json j;
      j["schema"] = "gvd-result/1";
      j["yes"] = r.yes;
      j["genus_bound"] = s_genus;
      j["budget"] = s_budget;
      j["orientable"] = s_orientable;
      if (r.min_deletions >= 0) j["min_deletions"] = r.min_deletions;
      else j["min_deletions"] = nullptr;
      if (r.yes) j["witness"] = r.witness;
      j["witness_verified"] = r.witness_verified;
      j["stats"] = {{"width", r.stats.width},
                    {"nodes", r.stats.node_count},
                    {"table_cells", r.stats.table_cells},
                    {"max_node_cells", r.stats.max_node_cells},
                    {"merge_candidates", r.stats.merge_candidates},
                    {"seconds", r.stats.seconds}};
      std::cout << j.dump(2) << "\n";
    } else if (r.yes) {
      std::cout << "YES " << r.min_deletions << "\n";
      if (s_witness) {
        std::cout << "witness:";
        for (int v : r.witness) std::cout << ' ' << v;
        std::cout << "\n";
      }
    } else {
      std::cout << "NO\n";
    }
    return r.yes ? 0 : 1;
  }

  if (app.got_subcommand(genus_cmd)) {
    if (g_embedding.empty() == g_graph.empty())
      throw std::runtime_error("pass exactly one of --graph and --embedding");
    int genus = 0;
    std::string source;
    if (!g_embedding.empty()) {
      gvd::Embedding e = gvd::parse_embedding(read_file(g_embedding));
      if (g_orientable && !gvd::check_orientable(e))
        throw std::runtime_error("embedding is not orientable");
      genus = gvd::euler_genus(e);
      source = "embedding";
    } else {
      gvd::Graph g = gvd::parse_graph(read_file(g_graph));
      gvd::TreeDecomposition td = load_td(g_td, g);
      genus = gvd::graph_genus_dp(g, td, g_orientable, g_threads);
      source = "graph";
    }
    if (g_json) {
      nlohmann::json j;
      j["schema"] = "gvd-genus/1";
      j["euler_genus"] = genus;
      j["orientable"] = g_orientable;
      j["source"] = source;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << genus << "\n";
    }
    return 0;
  }

  if (app.got_subcommand(oracle_cmd)) {
    gvd::Graph g = gvd::parse_graph(read_file(o_graph));
    gvd::OracleOptions opts;
    opts.max_schemes = o_schemes;
    opts.orientable_only = o_orientable;
    opts.reduce_signatures = !o_all_sig;
    opts.threads = o_threads;
    if (o_budget < 0) {
      int genus = gvd::exact_genus(g, opts);
      if (o_json) {
        nlohmann::json j;
        j["schema"] = "gvd-oracle/1";
        j["euler_genus"] = genus;
        j["orientable"] = o_orientable;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << genus << "\n";
      }
      return 0;
    }
    std::optional<int> best = gvd::brute_force_gvd(g, o_genus, o_budget, opts);
    if (o_json) {
      nlohmann::json j;
      j["schema"] = "gvd-oracle/1";
      j["yes"] = best.has_value();
      j["genus_bound"] = o_genus;
      j["budget"] = o_budget;
      j["orientable"] = o_orientable;
      if (best) j["min_deletions"] = *best;
      else j["min_deletions"] = nullptr;
      std::cout << j.dump(2) << "\n";
    } else if (best) {
      std::cout << "YES " << *best << "\n";
    } else {
      std::cout << "NO\n";
    }
    return best ? 0 : 1;
  }

  if (app.got_subcommand(enum_cmd)) {
    gvd::EnumerateLimits limits;
    limits.max_flags = e_max_flags;
    limits.max_states = e_states;
    std::vector<gvd::BoundariedEmbedding> all =
        gvd::enumerate_nice(e_labels, e_genus, e_orientable, limits);
    if (e_json) {
      nlohmann::json j;
      j["schema"] = "gvd-enumeration/1";
      j["labels"] = e_labels;
      j["genus_bound"] = e_genus;
      j["orientable"] = e_orientable;
      j["count"] = all.size();
      if (e_print) {
        std::vector<std::string> texts;
        for (const auto& be : all) texts.push_back(gvd::write_boundaried(be));
        j["embeddings"] = texts;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << all.size() << "\n";
      if (e_print)
        for (const auto& be : all) std::cout << gvd::write_boundaried(be) << "\n";
    }
    return 0;
  }

  if (app.got_subcommand(gen_cmd)) {
    auto want = [&](size_t k) {
      if (gen_args.size() != k)
        throw std::runtime_error("kind '" + gen_kind + "' takes " +
                                 std::to_string(k) + " argument(s)");
    };
    gvd::Graph g;
    if (gen_kind == "complete") {
      want(1);
      g = gvd::complete(static_cast<int>(gen_args[0]));
    } else if (gen_kind == "bipartite") {
      want(2);
      g = gvd::complete_bipartite(static_cast<int>(gen_args[0]),
                                  static_cast<int>(gen_args[1]));
    } else if (gen_kind == "grid") {
      want(2);
      g = gvd::grid(static_cast<int>(gen_args[0]), static_cast<int>(gen_args[1]));
    } else if (gen_kind == "wall") {
      want(1);
      g = gvd::wall(static_cast<int>(gen_args[0]));
    } else if (gen_kind == "b-ell") {
      want(1);
      g = gvd::b_ell(static_cast<int>(gen_args[0]));
    } else if (gen_kind == "random") {
      want(3);
      g = gvd::random_connected(static_cast<int>(gen_args[0]),
                                static_cast<int>(gen_args[1]),
                                static_cast<std::uint64_t>(gen_args[2]));
    } else {
      throw std::runtime_error("unknown kind '" + gen_kind + "'");
    }
    write_output(gen_out, gvd::write_graph(g));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
