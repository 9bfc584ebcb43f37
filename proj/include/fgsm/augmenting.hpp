#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fgsm/matching.hpp"

namespace fgsm {

// Alternating distance of an unreachable vertex.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// BFS layering of the vertices by alternating distance from the V vertices
// with residual capacity. L_0 holds exactly those vertices; U vertices sit
// in odd layers reached over unmatched edges, V vertices in even layers
// reached over matched edges. A layer index equals the alternating distance
// for every vertex the structure assigned one.
struct LayerStructure {
  static constexpr int kNoLayer = -1;

  std::vector<int> layer_u;
  std::vector<int> layer_v;
  std::vector<std::vector<int>> layers;  // frontier lists L_0, L_1, ...
  // Smallest odd layer holding a U vertex with residual capacity; empty
  // when no such layer exists, i.e. the matching is maximum.
  std::optional<int> t;
  bool truncated = true;

  int layer(Side side, int x) const {
    return side == Side::U ? layer_u[x] : layer_v[x];
  }

  // Alternating distance read straight off the layering. Only meaningful
  // for an untruncated structure or for vertices with an assigned layer.
  int adist(Side side, int x) const {
    int l = layer(side, x);
    return l == kNoLayer ? kUnreachable : l;
  }
};

// Builds the layering for the current matching. With truncate set the BFS
// stops right after the first odd layer containing a U vertex with residual
// capacity; deeper layers cannot host a shortest augmenting path.
LayerStructure layered_bfs(const BipartiteGraph& graph, const SemiMatching& m,
                           bool truncate = true);

// Alternating distance of one vertex, recomputed with an untruncated BFS.
int adist_full(const BipartiteGraph& graph, const SemiMatching& m, Side side,
               int x);

// Alternating distance using `ls` where it is conclusive and falling back
// to an untruncated recomputation for vertices beyond the truncation point.
int adist(const BipartiteGraph& graph, const SemiMatching& m,
          const LayerStructure& ls, Side side, int x);

// One shortest augmenting path (length ls.t, vertices inside L_0..L_t), or
// nothing when ls.t is empty.
std::optional<AlternatingPath> find_augmenting_path(const BipartiteGraph& graph,
                                                    const SemiMatching& m,
                                                    const LayerStructure& ls);

// Exhausts augmenting paths of length exactly ls.t inside the layer
// structure, applying each to `m` as it is found and updating residuals
// along the path only. Returns the number of augmentations (at least 1).
// When `collected` is given, the applied paths are appended to it with
// matched flags as of their application time. Throws PhaseOnMaximum if
// ls.t is empty.
int run_phase(const BipartiteGraph& graph, SemiMatching& m,
              const LayerStructure& ls,
              std::vector<AlternatingPath>* collected = nullptr);

}  // namespace fgsm
