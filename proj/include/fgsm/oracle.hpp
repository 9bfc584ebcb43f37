#pragma once

#include <span>
#include <vector>

#include "fgsm/matching.hpp"

namespace fgsm {

// Ground-truth routines for testing. Deliberately simple and slow; none of
// them shares code with the phase solver.

struct BruteForceResult {
  int size = 0;
  std::vector<int> witness;  // one maximum edge set, ascending ids
};

// Exact maximum by exhaustive search over edge subsets. Guarded: throws
// TooLarge for more than 20 edges.
BruteForceResult brute_force_max(const BipartiteGraph& graph,
                                 const Capacities& caps);

// Maximum size via a plain augmenting-path max flow on the standard
// network: source -> u with capacity f(u), unit arcs u -> v, v -> sink with
// capacity g(v).
int flow_reference_max(const BipartiteGraph& graph, const Capacities& caps);

// Splits the difference of two matchings of the same graph, |m_to| > |m_from|,
// into k = |m_to| - |m_from| pairwise edge-disjoint augmenting paths whose
// edges all lie in m_from ∪ m_to and whose composition via ⊕ turns m_from
// into m_to. Throws NotLarger if k ≤ 0 and InvalidMatching if either input
// breaks the given capacities.
std::vector<AlternatingPath> decompose_difference(const BipartiteGraph& graph,
                                                  const Capacities& caps,
                                                  const SemiMatching& m_from,
                                                  const SemiMatching& m_to);

// True iff no two paths share a V vertex. Intended for decompositions done
// under g ≡ 1, where the property is guaranteed.
bool check_f1_vertex_disjoint(std::span<const AlternatingPath> paths);

}  // namespace fgsm
