#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fgsm/graph.hpp"

namespace fgsm {

// Mutable degree-constrained edge subset over a fixed graph. Keeps matched
// degrees and residual capacities current under edge toggles; the capacity
// vectors are snapshotted at construction so residual queries are O(1).
class SemiMatching {
 public:
  SemiMatching(const BipartiteGraph& graph, const Capacities& caps);

  bool contains(int edge_id) const { return in_matching_[edge_id] != 0; }
  int size() const { return size_; }
  int nu() const { return static_cast<int>(f_.size()); }
  int nv() const { return static_cast<int>(g_.size()); }

  int deg_u(int u) const { return deg_u_[u]; }
  int deg_v(int v) const { return deg_v_[v]; }
  int capacity_u(int u) const { return f_[u]; }
  int capacity_v(int v) const { return g_[v]; }

  // c(x) = capacity minus matched degree; never negative for a valid state.
  int residual_u(int u) const { return f_[u] - deg_u_[u]; }
  int residual_v(int v) const { return g_[v] - deg_v_[v]; }
  int residual(Side side, int x) const {
    return side == Side::U ? residual_u(x) : residual_v(x);
  }

  // Matched edge ids in ascending order.
  std::vector<int> edge_ids() const;

  // V vertices with residual capacity, ascending.
  std::vector<int> free_v_vertices() const;

  // Flips membership of the given edges and updates the degree caches along
  // the way. No validation: the caller guarantees the result still respects
  // the capacity bounds.
  void toggle_edges(const BipartiteGraph& graph, std::span<const int> ids);

 private:
  std::vector<char> in_matching_;
  std::vector<int> deg_u_;
  std::vector<int> deg_v_;
  std::vector<int> f_;
  std::vector<int> g_;
  int size_ = 0;
};

// A path alternating between the two vertex sides, starting on the V side:
// entries at even positions of `vertices` are V indices, odd positions are
// U indices. Edge i joins vertices[i] and vertices[i+1]; edges at even
// positions are unmatched at construction time, odd positions matched.
// An odd-length path is augmenting: flipping it grows the matching by one.
struct AlternatingPath {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<char> matched_when_built;

  int length() const { return static_cast<int>(edges.size()); }
  bool is_augmenting() const { return length() % 2 == 1; }
  int start_vertex() const { return vertices.front(); }  // V side
  int end_vertex() const { return vertices.back(); }

  // The same path walked from the other V endpoint; legal for even lengths
  // only. Matched flags are refreshed against `current`.
  AlternatingPath reversed(const SemiMatching& current) const;
};

// Throws NotAlternating unless `path` is structurally valid for the graph
// and alternates unmatched/matched (starting unmatched) with respect to `m`.
void validate_alternating(const BipartiteGraph& graph, const SemiMatching& m,
                          const AlternatingPath& path);

// Returns m ⊕ path: matched path edges leave the matching, unmatched ones
// enter it. Throws NotAlternating on an invalid path and CapacityExhausted
// when an endpoint whose degree grows has no residual capacity.
SemiMatching apply_path(const BipartiteGraph& graph, const SemiMatching& m,
                        const AlternatingPath& path);

struct CapacityViolation {
  Side side;
  int vertex;
  int degree;
  int capacity;
};

struct CheckResult {
  std::optional<SemiMatching> matching;
  std::optional<CapacityViolation> violation;
  bool ok() const { return matching.has_value(); }
};

// Accepts the edge set iff all degree bounds hold; otherwise reports the
// first violating vertex (U side scanned before V). Duplicate ids collapse;
// an out-of-range id throws InvalidEdge.
CheckResult check_semi_matching(const BipartiteGraph& graph,
                                const Capacities& caps,
                                std::span<const int> edge_ids);

}  // namespace fgsm
