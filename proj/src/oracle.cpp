#include "fgsm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

namespace fgsm {

namespace {

constexpr int kBruteForceEdgeLimit = 20;

struct SubsetSearch {
  const BipartiteGraph& graph;
  const Capacities& caps;
  std::vector<int> du, dv;
  std::vector<int> current;
  BruteForceResult best{-1, {}};

  SubsetSearch(const BipartiteGraph& g, const Capacities& c)
      : graph(g), caps(c), du(g.nu(), 0), dv(g.nv(), 0) {}

  void run(int idx) {
    const int m = graph.edge_count();
    if (static_cast<int>(current.size()) + (m - idx) <= best.size) return;
    if (idx == m) {
      if (static_cast<int>(current.size()) > best.size)
        best = {static_cast<int>(current.size()), current};
      return;
    }
    const Edge& e = graph.edge(idx);
    if (du[e.u] < caps.f[e.u] && dv[e.v] < caps.g[e.v]) {
      ++du[e.u];
      ++dv[e.v];
      current.push_back(idx);
      run(idx + 1);
      current.pop_back();
      --du[e.u];
      --dv[e.v];
    }
    run(idx + 1);
  }
};

}  // namespace

BruteForceResult brute_force_max(const BipartiteGraph& graph,
                                 const Capacities& caps) {
  caps.check_shape(graph);
  if (graph.edge_count() > kBruteForceEdgeLimit)
    throw TooLarge("brute force limited to " +
                   std::to_string(kBruteForceEdgeLimit) + " edges, got " +
                   std::to_string(graph.edge_count()));
  SubsetSearch search(graph, caps);
  search.run(0);
  return search.best;
}

namespace {

// Plain Edmonds-Karp over an arc-pair residual network. Small and kept
// independent of the phase solver on purpose.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    const int n = static_cast<int>(head_.size());
    while (true) {
      std::vector<int> pre_arc(n, -1);
      std::vector<char> seen(n, 0);
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        const int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap <= 0 || seen[arcs_[a].to]) continue;
          seen[arcs_[a].to] = 1;
          pre_arc[arcs_[a].to] = a;
          q.push(arcs_[a].to);
        }
      }
      if (!seen[t]) return total;
      int push = std::numeric_limits<int>::max();
      for (int x = t; x != s; x = arcs_[pre_arc[x] ^ 1].to)
        push = std::min(push, arcs_[pre_arc[x]].cap);
      for (int x = t; x != s; x = arcs_[pre_arc[x] ^ 1].to) {
        arcs_[pre_arc[x]].cap -= push;
        arcs_[pre_arc[x] ^ 1].cap += push;
      }
      total += push;
    }
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

int flow_reference_max(const BipartiteGraph& graph, const Capacities& caps) {
  caps.check_shape(graph);
  const int source = 0;
  const int sink = 1 + graph.nu() + graph.nv();
  FlowNetwork net(sink + 1);
  for (int u = 0; u < graph.nu(); ++u) net.add_arc(source, 1 + u, caps.f[u]);
  for (int v = 0; v < graph.nv(); ++v)
    net.add_arc(1 + graph.nu() + v, sink, caps.g[v]);
  for (const Edge& e : graph.edges())
    net.add_arc(1 + e.u, 1 + graph.nu() + e.v, 1);
  return static_cast<int>(net.max_flow(source, sink));
}

namespace {

// Searches a vertex-simple alternating path through the remaining
// difference edges: B edges (in m_to only) forward from the V side, A edges
// (in m_from only) backward, ending at a U vertex that still holds more B
// than A edges. Exhaustive with backtracking; fine at oracle scales.
struct PeelSearch {
  const BipartiteGraph& graph;
  const std::vector<char>& avail_a;
  const std::vector<char>& avail_b;
  const std::vector<int>& rem_a_u;
  const std::vector<int>& rem_b_u;
  std::vector<char> vis_u, vis_v;
  std::vector<int> vstack, estack;

  PeelSearch(const BipartiteGraph& g, const std::vector<char>& a,
             const std::vector<char>& b, const std::vector<int>& rau,
             const std::vector<int>& rbu)
      : graph(g), avail_a(a), avail_b(b), rem_a_u(rau), rem_b_u(rbu),
        vis_u(g.nu(), 0), vis_v(g.nv(), 0) {}

  bool start(int v0) {
    vstack.assign(1, v0);
    estack.clear();
    std::fill(vis_u.begin(), vis_u.end(), 0);
    std::fill(vis_v.begin(), vis_v.end(), 0);
    vis_v[v0] = 1;
    return from_v(v0);
  }

  bool from_v(int v) {
    for (int e : graph.adj_v(v)) {
      if (!avail_b[e]) continue;
      const int u = graph.edge(e).u;
      if (vis_u[u]) continue;
      vis_u[u] = 1;
      estack.push_back(e);
      vstack.push_back(u);
      if (rem_a_u[u] < rem_b_u[u]) return true;  // deficient end vertex
      for (int e2 : graph.adj_u(u)) {
        if (!avail_a[e2]) continue;
        const int v2 = graph.edge(e2).v;
        if (vis_v[v2]) continue;
        vis_v[v2] = 1;
        estack.push_back(e2);
        vstack.push_back(v2);
        if (from_v(v2)) return true;
        vstack.pop_back();
        estack.pop_back();
        vis_v[v2] = 0;
      }
      vstack.pop_back();
      estack.pop_back();
      vis_u[u] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<AlternatingPath> decompose_difference(const BipartiteGraph& graph,
                                                  const Capacities& caps,
                                                  const SemiMatching& m_from,
                                                  const SemiMatching& m_to) {
  caps.check_shape(graph);
  for (int u = 0; u < graph.nu(); ++u)
    if (m_from.deg_u(u) > caps.f[u] || m_to.deg_u(u) > caps.f[u])
      throw InvalidMatching("U vertex " + std::to_string(u) +
                            " exceeds its capacity");
  for (int v = 0; v < graph.nv(); ++v)
    if (m_from.deg_v(v) > caps.g[v] || m_to.deg_v(v) > caps.g[v])
      throw InvalidMatching("V vertex " + std::to_string(v) +
                            " exceeds its capacity");
  const int k = m_to.size() - m_from.size();
  if (k <= 0)
    throw NotLarger("second matching must be strictly larger (difference " +
                    std::to_string(k) + ")");

  // Common edges never move; only the symmetric difference matters.
  std::vector<char> avail_a(graph.edge_count(), 0);
  std::vector<char> avail_b(graph.edge_count(), 0);
  std::vector<int> rem_a_u(graph.nu(), 0), rem_b_u(graph.nu(), 0);
  std::vector<int> rem_a_v(graph.nv(), 0), rem_b_v(graph.nv(), 0);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const bool in_from = m_from.contains(e);
    const bool in_to = m_to.contains(e);
    if (in_from == in_to) continue;
    const Edge& ed = graph.edge(e);
    if (in_from) {
      avail_a[e] = 1;
      ++rem_a_u[ed.u];
      ++rem_a_v[ed.v];
    } else {
      avail_b[e] = 1;
      ++rem_b_u[ed.u];
      ++rem_b_v[ed.v];
    }
  }

  // Work on a copy of m_from rebased onto the given capacities so residual
  // checks inside apply_path follow `caps`, not m_from's own snapshot.
  auto rebased = check_semi_matching(graph, caps, m_from.edge_ids());
  SemiMatching cur = std::move(*rebased.matching);

  std::vector<AlternatingPath> paths;
  paths.reserve(k);
  PeelSearch search(graph, avail_a, avail_b, rem_a_u, rem_b_u);
  for (int round = 0; round < k; ++round) {
    bool found = false;
    for (int v0 = 0; v0 < graph.nv() && !found; ++v0) {
      if (rem_b_v[v0] <= rem_a_v[v0]) continue;
      found = search.start(v0);
    }
    if (!found) throw Error("internal: no peelable augmenting path left");

    AlternatingPath p;
    p.vertices = search.vstack;
    p.edges = search.estack;
    p.matched_when_built.reserve(p.edges.size());
    for (int e : p.edges)
      p.matched_when_built.push_back(cur.contains(e) ? 1 : 0);

    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const int e = p.edges[i];
      const Edge& ed = graph.edge(e);
      if (i % 2 == 0) {
        avail_b[e] = 0;
        --rem_b_u[ed.u];
        --rem_b_v[ed.v];
      } else {
        avail_a[e] = 0;
        --rem_a_u[ed.u];
        --rem_a_v[ed.v];
      }
    }
    cur = apply_path(graph, cur, p);  // also validates the peel
    paths.push_back(std::move(p));
  }
  return paths;
}

bool check_f1_vertex_disjoint(std::span<const AlternatingPath> paths) {
  std::unordered_set<int> seen;
  for (const AlternatingPath& p : paths) {
    std::unordered_set<int> own;
    for (std::size_t i = 0; i < p.vertices.size(); i += 2)
      own.insert(p.vertices[i]);
    for (int v : own)
      if (!seen.insert(v).second) return false;
  }
  return true;
}

}  // namespace fgsm
