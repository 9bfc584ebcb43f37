#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgsm/graph.hpp"
#include "fgsm/solver.hpp"

namespace fgsm {

// Deterministic 64-bit generator (splitmix64). The exact update is part of
// the instance-file contract: same seed, same bytes. See the README.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [1, bound] via modulo; bound ≥ 1.
  int next_in(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound)) + 1;
  }

 private:
  std::uint64_t state_;
};

// Text instance. Vertices are 1-based in files, 0-based in memory.
// Canonical serialization: header, f overrides sorted by vertex, g overrides
// sorted by vertex, edges in input order.
struct InstanceFile {
  int nu = 0;
  int nv = 0;
  std::vector<std::pair<int, int>> f_overrides;  // (0-based u, capacity)
  std::vector<std::pair<int, int>> g_overrides;  // (0-based v, capacity)
  std::vector<Edge> edges;

  std::string serialize() const;
  std::pair<BipartiteGraph, Capacities> instantiate() const;
};

// Accepts:
//   c <comment>            ignored, as are blank lines
//   p fgsm <nu> <nv> <m>   exactly once, before any other data line
//   f <u> <cap>            capacity override, at most once per vertex
//   g <v> <cap>
//   e <u> <v>              exactly m of these
// Unspecified capacities default to 1. Errors carry the offending line.
InstanceFile parse_instance(std::string_view text);

// Deterministic random instance: f caps for u = 1..nu, then g caps for
// v = 1..nv, each uniform in [1, fmax] resp. [1, gmax], then edges drawn
// without replacement from the nu×nv grid by rejection, in draw order.
// Capacity overrides are recorded only where the value differs from 1.
InstanceFile generate(int nu, int nv, int m, int fmax, int gmax,
                      std::uint64_t seed);

// Solution text:
//   s size <k>
//   m <u> <v>        one per matched edge, ascending edge id, 1-based
//   i phases <p>
//   i pathlens <t1,t2,...>
std::string emit_solution(const BipartiteGraph& graph, const SemiMatching& m,
                          const SolveStats& stats);

struct Solution {
  int size = 0;
  std::vector<Edge> matched;  // 0-based endpoints, in file order
};

// Reads the s/m lines of a solution; i and c lines are ignored.
Solution parse_solution(std::string_view text);

}  // namespace fgsm
