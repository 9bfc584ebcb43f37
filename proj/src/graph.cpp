#include "fgsm/graph.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

namespace fgsm {

BipartiteGraph::BipartiteGraph(int nu, int nv, std::vector<Edge> edge_list)
    : nu_(nu), nv_(nv), edges_(std::move(edge_list)) {
  if (nu_ < 0 || nv_ < 0) throw InvalidVertex("negative vertex count");
  adj_u_.resize(nu_);
  adj_v_.resize(nv_);
  std::unordered_set<long long> seen;
  seen.reserve(edges_.size() * 2);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= nu_)
      throw InvalidVertex("edge " + std::to_string(id) + ": U index " +
                          std::to_string(e.u) + " out of range");
    if (e.v < 0 || e.v >= nv_)
      throw InvalidVertex("edge " + std::to_string(id) + ": V index " +
                          std::to_string(e.v) + " out of range");
    long long key = static_cast<long long>(e.u) * nv_ + e.v;
    if (!seen.insert(key).second)
      throw DuplicateEdge("duplicate edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ")");
    adj_u_[e.u].push_back(id);
    adj_v_[e.v].push_back(id);
  }
}

Capacities Capacities::uniform(const BipartiteGraph& graph, int fu, int gv) {
  return Capacities{std::vector<int>(graph.nu(), fu),
                    std::vector<int>(graph.nv(), gv)};
}

long long Capacities::f_total() const {
  return std::accumulate(f.begin(), f.end(), 0LL);
}

long long Capacities::g_total() const {
  return std::accumulate(g.begin(), g.end(), 0LL);
}

void Capacities::check_shape(const BipartiteGraph& graph) const {
  if (static_cast<int>(f.size()) != graph.nu() ||
      static_cast<int>(g.size()) != graph.nv())
    throw Error("capacity vectors do not match the graph");
  for (int x : f)
    if (x < 0) throw Error("negative U capacity");
  for (int x : g)
    if (x < 0) throw Error("negative V capacity");
}

}  // namespace fgsm
