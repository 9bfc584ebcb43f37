#pragma once

#include <optional>
#include <vector>

#include "fgsm/augmenting.hpp"
#include "fgsm/matching.hpp"

namespace fgsm {

struct PhaseRecord {
  int path_length;    // shortest augmenting path length in this phase
  int augmentations;  // paths applied during the phase
};

struct SolveStats {
  std::vector<PhaseRecord> phases;
  int matching_size = 0;
  int initial_size = 0;  // size after the warm start, before any phase
  bool warm_start = false;
  double elapsed_seconds = 0.0;

  int phase_count() const { return static_cast<int>(phases.size()); }
  long long total_augmentations() const;

  // phase_count ≤ 2·sqrt(matching_size) + 1. Meaningful for cold starts of
  // the phase solver.
  bool within_phase_bound() const;

  // Per-phase path lengths are odd and strictly increasing.
  bool path_lengths_strictly_increasing() const;
};

struct SolveOptions {
  // Seed the matching by scanning edges in input order and taking every
  // edge both residuals allow before the first phase.
  bool warm_start = false;
};

struct SolveResult {
  SemiMatching matching;
  SolveStats stats;
};

// Maximum (f,g)-semi-matching by repeated phases: layer the graph, exhaust
// the shortest augmenting length, repeat until no augmenting path exists.
SolveResult solve_max(const BipartiteGraph& graph, const Capacities& caps,
                      const SolveOptions& options = {});

// Baseline: one shortest augmenting path per iteration. Same final size as
// solve_max; stats record one PhaseRecord per augmentation.
SolveResult solve_max_single(const BipartiteGraph& graph,
                             const Capacities& caps,
                             const SolveOptions& options = {});

// Empty result means m is maximum; otherwise a concrete augmenting path
// disproving maximality.
std::optional<AlternatingPath> certify_maximum(const BipartiteGraph& graph,
                                               const SemiMatching& m);

// Greedy seed pass; returns the number of edges added.
int greedy_warm_start(const BipartiteGraph& graph, SemiMatching& m);

}  // namespace fgsm
