#include "fgsm/solver.hpp"

#include <chrono>
#include <cmath>

namespace fgsm {

long long SolveStats::total_augmentations() const {
  long long s = 0;
  for (const PhaseRecord& p : phases) s += p.augmentations;
  return s;
}

bool SolveStats::within_phase_bound() const {
  return phase_count() <= 2.0 * std::sqrt(static_cast<double>(matching_size)) +
                              1.0 + 1e-9;
}

bool SolveStats::path_lengths_strictly_increasing() const {
  int prev = 0;  // lengths are odd, so strictly above 0 from the start
  for (const PhaseRecord& p : phases) {
    if (p.path_length % 2 == 0 || p.path_length <= prev) return false;
    prev = p.path_length;
  }
  return true;
}

int greedy_warm_start(const BipartiteGraph& graph, SemiMatching& m) {
  int added = 0;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    if (m.contains(e)) continue;
    if (m.residual_u(ed.u) > 0 && m.residual_v(ed.v) > 0) {
      const int one[] = {e};
      m.toggle_edges(graph, one);
      ++added;
    }
  }
  return added;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SolveResult solve_max(const BipartiteGraph& graph, const Capacities& caps,
                      const SolveOptions& options) {
  caps.check_shape(graph);
  const auto start = Clock::now();
  SolveResult result{SemiMatching(graph, caps), {}};
  if (options.warm_start) {
    result.stats.warm_start = true;
    greedy_warm_start(graph, result.matching);
    result.stats.initial_size = result.matching.size();
  }
  while (true) {
    const LayerStructure ls = layered_bfs(graph, result.matching);
    if (!ls.t) break;
    const int augmentations = run_phase(graph, result.matching, ls);
    result.stats.phases.push_back({*ls.t, augmentations});
  }
  result.stats.matching_size = result.matching.size();
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

SolveResult solve_max_single(const BipartiteGraph& graph,
                             const Capacities& caps,
                             const SolveOptions& options) {
  caps.check_shape(graph);
  const auto start = Clock::now();
  SolveResult result{SemiMatching(graph, caps), {}};
  if (options.warm_start) {
    result.stats.warm_start = true;
    greedy_warm_start(graph, result.matching);
    result.stats.initial_size = result.matching.size();
  }
  while (true) {
    const LayerStructure ls = layered_bfs(graph, result.matching);
    if (!ls.t) break;
    const auto path = find_augmenting_path(graph, result.matching, ls);
    if (!path) throw Error("internal: layering promised a path");
    result.matching.toggle_edges(graph, path->edges);
    result.stats.phases.push_back({path->length(), 1});
  }
  result.stats.matching_size = result.matching.size();
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

std::optional<AlternatingPath> certify_maximum(const BipartiteGraph& graph,
                                               const SemiMatching& m) {
  const LayerStructure ls = layered_bfs(graph, m);
  if (!ls.t) return std::nullopt;
  auto path = find_augmenting_path(graph, m, ls);
  if (!path) throw Error("internal: layering promised a witness");
  return path;
}

}  // namespace fgsm
