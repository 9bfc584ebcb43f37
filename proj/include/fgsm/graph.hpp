#pragma once

#include <vector>

#include "fgsm/errors.hpp"

namespace fgsm {

enum class Side { U, V };

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable bipartite graph over vertex sets U (0..nu-1) and V (0..nv-1).
// Edge ids are assigned in input order and stay stable afterwards, so an
// edge subset can be represented as a set of ids. Immutable after
// construction and safe to share across threads.
class BipartiteGraph {
 public:
  BipartiteGraph(int nu, int nv, std::vector<Edge> edge_list);

  int nu() const { return nu_; }
  int nv() const { return nv_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge ids in input order.
  const std::vector<int>& adj_u(int u) const { return adj_u_[u]; }
  const std::vector<int>& adj_v(int v) const { return adj_v_[v]; }

  int deg_u(int u) const { return static_cast<int>(adj_u_[u].size()); }
  int deg_v(int v) const { return static_cast<int>(adj_v_[v].size()); }

 private:
  int nu_;
  int nv_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_u_;
  std::vector<std::vector<int>> adj_v_;
};

inline BipartiteGraph build_graph(int nu, int nv, std::vector<Edge> edge_list) {
  return BipartiteGraph(nu, nv, std::move(edge_list));
}

// Per-vertex degree bounds: f on the U side, g on the V side. Entries may be
// zero (such a vertex is never matched) and may exceed the vertex degree.
struct Capacities {
  std::vector<int> f;
  std::vector<int> g;

  static Capacities uniform(const BipartiteGraph& graph, int fu, int gv);

  long long f_total() const;
  long long g_total() const;

  // Throws if the vectors do not match the graph or contain negatives.
  void check_shape(const BipartiteGraph& graph) const;
};

}  // namespace fgsm
