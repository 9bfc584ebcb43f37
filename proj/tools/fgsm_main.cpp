// Command-line front end: solve/verify/oracle/optimal/quasi instances in the
// text format described in the README, generate random instances, and run
// the phase-count benchmark.
//
// Exit codes: 0 success (or feasible), 1 infeasible quasi-matching or failed
// verification, 2 invalid input.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "fgsm/applications.hpp"
#include "fgsm/instance_io.hpp"
#include "fgsm/oracle.hpp"
#include "fgsm/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fgsm::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::pair<fgsm::BipartiteGraph, fgsm::Capacities> load_instance(
    const std::string& path) {
  return fgsm::parse_instance(read_file(path)).instantiate();
}

int reject(const std::string& message) {
  std::cerr << "rejected: " << message << "\n";
  return kExitRejected;
}

struct SolveArgs {
  std::string path;
  std::string algorithm = "phases";
  bool warm_start = false;
  bool stats = false;
};

int cmd_solve(const SolveArgs& args) {
  auto [graph, caps] = load_instance(args.path);
  const fgsm::SolveOptions options{args.warm_start};
  const fgsm::SolveResult result =
      args.algorithm == "single" ? fgsm::solve_max_single(graph, caps, options)
                                 : fgsm::solve_max(graph, caps, options);
  std::cout << fgsm::emit_solution(graph, result.matching, result.stats);
  if (args.stats) {
    const auto& st = result.stats;
    std::cerr << "stats: size=" << st.matching_size
              << " phases=" << st.phase_count()
              << " bound=" << std::fixed << std::setprecision(1)
              << 2.0 * std::sqrt(static_cast<double>(st.matching_size)) + 1.0
              << " elapsed_ms=" << std::setprecision(3)
              << st.elapsed_seconds * 1e3;
    if (st.warm_start) std::cerr << " warm_start_size=" << st.initial_size;
    std::cerr << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string instance_path;
  std::string solution_path;
  bool check_max = false;
};

int cmd_verify(const VerifyArgs& args) {
  auto [graph, caps] = load_instance(args.instance_path);
  const fgsm::Solution sol = fgsm::parse_solution(read_file(args.solution_path));

  std::unordered_map<long long, int> edge_index;
  edge_index.reserve(graph.edge_count() * 2);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const fgsm::Edge& ed = graph.edge(e);
    edge_index[static_cast<long long>(ed.u) * graph.nv() + ed.v] = e;
  }

  std::vector<int> ids;
  std::vector<char> used(graph.edge_count(), 0);
  for (const fgsm::Edge& ed : sol.matched) {
    if (ed.u < 0 || ed.u >= graph.nu() || ed.v < 0 || ed.v >= graph.nv())
      return reject("matched edge (" + std::to_string(ed.u + 1) + "," +
                    std::to_string(ed.v + 1) + ") is out of range");
    const auto it =
        edge_index.find(static_cast<long long>(ed.u) * graph.nv() + ed.v);
    if (it == edge_index.end())
      return reject("matched edge (" + std::to_string(ed.u + 1) + "," +
                    std::to_string(ed.v + 1) + ") is not in the graph");
    if (used[it->second])
      return reject("edge (" + std::to_string(ed.u + 1) + "," +
                    std::to_string(ed.v + 1) + ") listed twice");
    used[it->second] = 1;
    ids.push_back(it->second);
  }
  if (static_cast<int>(ids.size()) != sol.size)
    return reject("solution claims size " + std::to_string(sol.size) +
                  " but lists " + std::to_string(ids.size()) + " edges");

  const fgsm::CheckResult check = fgsm::check_semi_matching(graph, caps, ids);
  if (!check.ok()) {
    const auto& viol = *check.violation;
    return reject(std::string(viol.side == fgsm::Side::U ? "U" : "V") +
                  " vertex " + std::to_string(viol.vertex + 1) + " has degree " +
                  std::to_string(viol.degree) + " > capacity " +
                  std::to_string(viol.capacity));
  }
  if (args.check_max) {
    const auto witness = fgsm::certify_maximum(graph, *check.matching);
    if (witness)
      return reject("matching is not maximum: augmenting path of length " +
                    std::to_string(witness->length()) + " exists");
  }
  std::cout << "ok size " << sol.size << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& path) {
  auto [graph, caps] = load_instance(path);
  const fgsm::BruteForceResult result = fgsm::brute_force_max(graph, caps);
  std::cout << "s size " << result.size << "\n";
  for (int e : result.witness) {
    const fgsm::Edge& ed = graph.edge(e);
    std::cout << "m " << ed.u + 1 << " " << ed.v + 1 << "\n";
  }
  return kExitOk;
}

int cmd_optimal(const std::string& path) {
  auto [graph, caps] = load_instance(path);
  for (int cap : caps.f)
    if (cap != 1) throw fgsm::Error("optimal requires f(u) = 1 for every u");
  auto [matching, report] = fgsm::optimal_semi_matching(graph);
  std::cout << "s size " << matching.size() << "\n";
  for (int e : matching.edge_ids()) {
    const fgsm::Edge& ed = graph.edge(e);
    std::cout << "m " << ed.u + 1 << " " << ed.v + 1 << "\n";
  }
  std::cout << "i cost " << report.total_cost << "\n";
  std::cout << "i maxload " << report.max_load << "\n";
  return kExitOk;
}

int cmd_quasi(const std::string& path) {
  auto [graph, caps] = load_instance(path);
  const fgsm::QuasiResult result = fgsm::quasi_matching(graph, caps);
  if (!result.feasible())
    return reject("no quasi-matching: maximum size " +
                  std::to_string(result.stats.matching_size) +
                  " < g(V) = " + std::to_string(caps.g_total()));
  std::cout << fgsm::emit_solution(graph, *result.matching, result.stats);
  return kExitOk;
}

struct GenArgs {
  int nu = 0, nv = 0, m = 0;
  int fmax = 1, gmax = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  const fgsm::InstanceFile inst =
      fgsm::generate(args.nu, args.nv, args.m, args.fmax, args.gmax, args.seed);
  const std::string text = inst.serialize();
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw fgsm::Error("cannot write '" + args.output + "'");
    out << text;
  }
  return kExitOk;
}

struct BenchArgs {
  std::string family = "random";
  std::string sizes = "1000,10000,100000";
  std::uint64_t seed = 1;
};

std::vector<int> parse_size_list(const std::string& list) {
  std::vector<int> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw fgsm::Error("bench: empty size list");
  return out;
}

int cmd_bench(const BenchArgs& args) {
  const std::vector<int> sizes = parse_size_list(args.sizes);
  std::cout << "# family size n m s phases 2sqrt_s elapsed_ms\n";
  bool bound_ok = true;
  for (int size : sizes) {
    if (size <= 0) throw fgsm::Error("bench: sizes must be positive");
    int n = 0;
    long long m = 0;
    fgsm::SolveResult result = [&] {
      if (args.family == "knn") {
        n = size;
        m = static_cast<long long>(size) * size;
        std::vector<fgsm::Edge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int u = 0; u < size; ++u)
          for (int v = 0; v < size; ++v) edges.push_back({u, v});
        const fgsm::BipartiteGraph graph(size, size, std::move(edges));
        return fgsm::solve_max(graph, fgsm::Capacities::uniform(graph, 1, 1));
      }
      if (args.family != "random")
        throw fgsm::Error("bench: unknown family '" + args.family + "'");
      n = std::max(1, size / 10);
      if (static_cast<long long>(n) * n < size)  // keep the grid half full
        n = static_cast<int>(std::ceil(std::sqrt(2.0 * size)));
      m = size;
      const fgsm::InstanceFile inst =
          fgsm::generate(n, n, size, 4, 4, args.seed + size);
      auto [graph, caps] = inst.instantiate();
      return fgsm::solve_max(graph, caps);
    }();
    const auto& st = result.stats;
    const double bound =
        2.0 * std::sqrt(static_cast<double>(st.matching_size)) + 1.0;
    if (st.phase_count() > bound) bound_ok = false;
    std::cout << args.family << " " << size << " " << n << " " << m << " "
              << st.matching_size << " " << st.phase_count() << " "
              << std::fixed << std::setprecision(1) << bound << " "
              << std::setprecision(3) << st.elapsed_seconds * 1e3 << "\n";
  }
  if (!bound_ok) {
    std::cerr << "rejected: a run exceeded the phase bound\n";
    return kExitRejected;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum (f,g)-semi-matching solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", solve_args.path, "instance file")->required();
  solve->add_option("--algorithm", solve_args.algorithm, "phases|single")
      ->check(CLI::IsMember({"phases", "single"}));
  solve->add_flag("--warm-start", solve_args.warm_start,
                  "greedy seed pass before the phase loop");
  solve->add_flag("--stats", solve_args.stats, "solver telemetry on stderr");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("instance", verify_args.instance_path)->required();
  verify->add_option("solution", verify_args.solution_path)->required();
  verify->add_flag("--check-max", verify_args.check_max,
                   "also require the matching to be maximum");

  std::string oracle_path;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive maximum (small instances)");
  oracle->add_option("instance", oracle_path)->required();

  std::string optimal_path;
  CLI::App* optimal = app.add_subcommand("optimal", "minimum-cost assignment of all U vertices");
  optimal->add_option("instance", optimal_path)->required();

  std::string quasi_path;
  CLI::App* quasi = app.add_subcommand("quasi", "lower-bounded matching feasibility");
  quasi->add_option("instance", quasi_path)->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "deterministic random instance");
  gen->add_option("--nu", gen_args.nu)->required();
  gen->add_option("--nv", gen_args.nv)->required();
  gen->add_option("--m", gen_args.m)->required();
  gen->add_option("--fmax", gen_args.fmax);
  gen->add_option("--gmax", gen_args.gmax);
  gen->add_option("--seed", gen_args.seed)->required();
  gen->add_option("-o,--output", gen_args.output, "write to a file instead of stdout");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "phase-count benchmark table");
  bench->add_option("--family", bench_args.family, "random|knn");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated size list");
  bench->add_option("--seed", bench_args.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_args);
    if (*oracle) return cmd_oracle(oracle_path);
    if (*optimal) return cmd_optimal(optimal_path);
    if (*quasi) return cmd_quasi(quasi_path);
    if (*gen) return cmd_gen(gen_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
