#include "fgsm/augmenting.hpp"

#include <algorithm>

namespace fgsm {

LayerStructure layered_bfs(const BipartiteGraph& graph, const SemiMatching& m,
                           bool truncate) {
  LayerStructure ls;
  ls.layer_u.assign(graph.nu(), LayerStructure::kNoLayer);
  ls.layer_v.assign(graph.nv(), LayerStructure::kNoLayer);
  ls.truncated = truncate;

  std::vector<int> l0;
  for (int v = 0; v < graph.nv(); ++v) {
    if (m.residual_v(v) > 0) {
      ls.layer_v[v] = 0;
      l0.push_back(v);
    }
  }
  ls.layers.push_back(std::move(l0));

  for (int i = 0;; i += 2) {
    // U layer over unmatched edges.
    std::vector<int> lu;
    bool has_free_u = false;
    for (int v : ls.layers[i]) {
      for (int e : graph.adj_v(v)) {
        if (m.contains(e)) continue;
        const int u = graph.edge(e).u;
        if (ls.layer_u[u] != LayerStructure::kNoLayer) continue;
        ls.layer_u[u] = i + 1;
        lu.push_back(u);
        if (m.residual_u(u) > 0) has_free_u = true;
      }
    }
    if (lu.empty()) break;
    ls.layers.push_back(std::move(lu));
    if (has_free_u && !ls.t) {
      ls.t = i + 1;
      if (truncate) break;
    }

    // V layer over matched edges.
    std::vector<int> lv;
    for (int u : ls.layers[i + 1]) {
      for (int e : graph.adj_u(u)) {
        if (!m.contains(e)) continue;
        const int v = graph.edge(e).v;
        if (ls.layer_v[v] != LayerStructure::kNoLayer) continue;
        ls.layer_v[v] = i + 2;
        lv.push_back(v);
      }
    }
    if (lv.empty()) break;
    ls.layers.push_back(std::move(lv));
  }
  return ls;
}

int adist_full(const BipartiteGraph& graph, const SemiMatching& m, Side side,
               int x) {
  return layered_bfs(graph, m, /*truncate=*/false).adist(side, x);
}

int adist(const BipartiteGraph& graph, const SemiMatching& m,
          const LayerStructure& ls, Side side, int x) {
  const int l = ls.layer(side, x);
  if (l != LayerStructure::kNoLayer) return l;
  if (!ls.truncated) return kUnreachable;
  return adist_full(graph, m, side, x);
}

namespace {

// Depth-first search for augmenting paths of length exactly t, walking the
// layers downward from a seed in L_t. Per-vertex cursors into the adjacency
// lists persist for a whole phase: an edge the cursor moved past is retired,
// either because its far end is exhausted or because its status or layer
// rules it out of any remaining length-t path. That keeps a phase linear in
// the number of edges.
class PhaseDfs {
 public:
  PhaseDfs(const BipartiteGraph& graph, const SemiMatching& m,
           const LayerStructure& ls)
      : graph_(graph), m_(m), ls_(ls),
        cur_u_(graph.nu(), 0), cur_v_(graph.nv(), 0) {}

  // On success the stacks hold the path from the seed (layer t) down to a
  // V vertex in L_0 with residual capacity.
  bool find(int seed) {
    edge_stack_.clear();
    vertex_stack_.clear();
    vertex_stack_.push_back(seed);
    while (true) {
      if (vertex_stack_.size() % 2 == 1) {
        const int u = vertex_stack_.back();
        const int layer = ls_.layer_u[u];
        const auto& inc = graph_.adj_u(u);
        bool descended = false;
        while (cur_u_[u] < static_cast<int>(inc.size())) {
          const int e = inc[cur_u_[u]];
          const int v = graph_.edge(e).v;
          if (!m_.contains(e) && ls_.layer_v[v] == layer - 1 &&
              (layer > 1 || m_.residual_v(v) > 0)) {
            edge_stack_.push_back(e);
            vertex_stack_.push_back(v);
            if (layer == 1) return true;
            descended = true;
            break;
          }
          ++cur_u_[u];
        }
        if (descended) continue;
        if (vertex_stack_.size() == 1) return false;  // seed exhausted
        vertex_stack_.pop_back();
        edge_stack_.pop_back();
        ++cur_v_[vertex_stack_.back()];  // edge into dead u is retired
      } else {
        const int v = vertex_stack_.back();
        const int layer = ls_.layer_v[v];
        const auto& inc = graph_.adj_v(v);
        bool descended = false;
        while (cur_v_[v] < static_cast<int>(inc.size())) {
          const int e = inc[cur_v_[v]];
          const int u = graph_.edge(e).u;
          if (m_.contains(e) && ls_.layer_u[u] == layer - 1) {
            edge_stack_.push_back(e);
            vertex_stack_.push_back(u);
            descended = true;
            break;
          }
          ++cur_v_[v];
        }
        if (descended) continue;
        vertex_stack_.pop_back();
        edge_stack_.pop_back();
        ++cur_u_[vertex_stack_.back()];
      }
    }
  }

  const std::vector<int>& edge_stack() const { return edge_stack_; }

  // Path object in V -> U orientation with flags as of the current matching.
  AlternatingPath extract_path() const {
    AlternatingPath p;
    p.vertices.assign(vertex_stack_.rbegin(), vertex_stack_.rend());
    p.edges.assign(edge_stack_.rbegin(), edge_stack_.rend());
    p.matched_when_built.reserve(p.edges.size());
    for (int e : p.edges)
      p.matched_when_built.push_back(m_.contains(e) ? 1 : 0);
    return p;
  }

 private:
  const BipartiteGraph& graph_;
  const SemiMatching& m_;
  const LayerStructure& ls_;
  std::vector<int> cur_u_, cur_v_;
  std::vector<int> edge_stack_;
  std::vector<int> vertex_stack_;
};

}  // namespace

std::optional<AlternatingPath> find_augmenting_path(const BipartiteGraph& graph,
                                                    const SemiMatching& m,
                                                    const LayerStructure& ls) {
  if (!ls.t) return std::nullopt;
  PhaseDfs dfs(graph, m, ls);
  for (int u : ls.layers[*ls.t]) {
    if (m.residual_u(u) <= 0) continue;
    if (dfs.find(u)) return dfs.extract_path();
  }
  return std::nullopt;
}

int run_phase(const BipartiteGraph& graph, SemiMatching& m,
              const LayerStructure& ls,
              std::vector<AlternatingPath>* collected) {
  if (!ls.t) throw PhaseOnMaximum("no augmenting path exists");
  PhaseDfs dfs(graph, m, ls);
  int augmentations = 0;
  for (int u : ls.layers[*ls.t]) {
    // Re-seed until the residual is spent or the search from u fails.
    while (m.residual_u(u) > 0 && dfs.find(u)) {
      if (collected) collected->push_back(dfs.extract_path());
      m.toggle_edges(graph, dfs.edge_stack());
      ++augmentations;
    }
  }
  return augmentations;
}

}  // namespace fgsm
