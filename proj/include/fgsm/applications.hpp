#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fgsm/matching.hpp"
#include "fgsm/solver.hpp"

namespace fgsm {

// Load-balancing view of a matching: each V vertex is a machine, its
// matched degree is its load.
struct CostReport {
  long long total_cost = 0;       // sum over v of load·(load+1)/2
  std::vector<int> loads;         // per V vertex
  int max_load = 0;
  std::vector<int> histogram;     // histogram[l] = number of machines with load l
};

CostReport cost(const SemiMatching& m);

// Minimum-cost assignment of every U vertex to exactly one neighbor.
// Processes U vertices in input order; for each, augments along the
// alternating reassignment structure towards a reachable machine of minimum
// current load (lowest index on ties). Throws UnsaturatableU when a U
// vertex has no neighbors.
std::pair<SemiMatching, CostReport> optimal_semi_matching(
    const BipartiteGraph& graph);

// Smallest k such that assigning every U vertex once keeps every machine's
// load at most k. Binary search over feasibility of a perfect (1, g≡k)
// matching. Throws UnsaturatableU when a U vertex has no neighbors.
int min_max_load(const BipartiteGraph& graph);

struct QuasiResult {
  std::optional<SemiMatching> matching;
  SolveStats stats;
  bool feasible() const { return matching.has_value(); }
};

// An edge set with deg ≤ f on U and deg ≥ g on V, or infeasible. A maximum
// (f,g)-semi-matching saturates every V vertex exactly when such a set
// exists, so feasibility reduces to |solve_max| = g(V); see the README for
// the argument.
QuasiResult quasi_matching(const BipartiteGraph& graph, const Capacities& caps);

}  // namespace fgsm
