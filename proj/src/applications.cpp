#include "fgsm/applications.hpp"

#include <algorithm>
#include <string>

namespace fgsm {

CostReport cost(const SemiMatching& m) {
  CostReport report;
  report.loads.reserve(m.nv());
  for (int v = 0; v < m.nv(); ++v) {
    const int load = m.deg_v(v);
    report.loads.push_back(load);
    report.total_cost += static_cast<long long>(load) * (load + 1) / 2;
    report.max_load = std::max(report.max_load, load);
  }
  report.histogram.assign(report.max_load + 1, 0);
  for (int load : report.loads) ++report.histogram[load];
  return report;
}

std::pair<SemiMatching, CostReport> optimal_semi_matching(
    const BipartiteGraph& graph) {
  for (int u = 0; u < graph.nu(); ++u)
    if (graph.deg_u(u) == 0)
      throw UnsaturatableU("U vertex " + std::to_string(u) +
                           " has no neighbors");

  constexpr int kNone = -1;
  std::vector<int> match_edge(graph.nu(), kNone);
  std::vector<int> load(graph.nv(), 0);
  std::vector<std::vector<int>> users(graph.nv());

  std::vector<int> parent_edge(graph.nv(), kNone);
  std::vector<char> visited(graph.nv(), 0);
  std::vector<int> reached;

  for (int u0 = 0; u0 < graph.nu(); ++u0) {
    reached.clear();
    auto visit = [&](int v, int e) {
      if (visited[v]) return;
      visited[v] = 1;
      parent_edge[v] = e;
      reached.push_back(v);
    };
    for (int e : graph.adj_u(u0)) visit(graph.edge(e).v, e);
    for (std::size_t qi = 0; qi < reached.size(); ++qi) {
      const int v = reached[qi];
      for (int u : users[v])
        for (int e : graph.adj_u(u)) visit(graph.edge(e).v, e);
    }

    // Machine of minimum load among everything reachable, lowest index on
    // ties, then shift assignments back along the parent chain.
    int best = reached.front();
    for (int v : reached)
      if (load[v] < load[best] || (load[v] == load[best] && v < best)) best = v;

    int v = best;
    while (true) {
      const int e = parent_edge[v];
      const int u = graph.edge(e).u;
      const int old_edge = match_edge[u];
      match_edge[u] = e;
      ++load[v];
      users[v].push_back(u);
      if (old_edge == kNone) break;  // reached u0
      const int old_v = graph.edge(old_edge).v;
      --load[old_v];
      auto& old_users = users[old_v];
      old_users.erase(std::find(old_users.begin(), old_users.end(), u));
      v = old_v;
    }

    for (int v2 : reached) {
      visited[v2] = 0;
      parent_edge[v2] = kNone;
    }
  }

  Capacities caps{std::vector<int>(graph.nu(), 1), std::vector<int>(graph.nv())};
  for (int v = 0; v < graph.nv(); ++v) caps.g[v] = graph.deg_v(v);
  auto checked = check_semi_matching(graph, caps, match_edge);
  SemiMatching m = std::move(*checked.matching);
  CostReport report = cost(m);
  return {std::move(m), std::move(report)};
}

int min_max_load(const BipartiteGraph& graph) {
  for (int u = 0; u < graph.nu(); ++u)
    if (graph.deg_u(u) == 0)
      throw UnsaturatableU("U vertex " + std::to_string(u) +
                           " has no neighbors");
  if (graph.nu() == 0) return 0;

  auto feasible = [&](int k) {
    const Capacities caps = Capacities::uniform(graph, 1, k);
    return solve_max(graph, caps).matching.size() == graph.nu();
  };
  int lo = 1, hi = graph.nu();  // k = nu always works: any neighbor per task
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

QuasiResult quasi_matching(const BipartiteGraph& graph,
                           const Capacities& caps) {
  SolveResult solved = solve_max(graph, caps);
  QuasiResult result{std::nullopt, std::move(solved.stats)};
  // Every V vertex saturated exactly to g(v) iff the size reaches g(V).
  if (static_cast<long long>(solved.matching.size()) == caps.g_total())
    result.matching = std::move(solved.matching);
  return result;
}

}  // namespace fgsm
