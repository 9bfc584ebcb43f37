#include "fgsm/matching.hpp"

#include <algorithm>
#include <string>

namespace fgsm {

SemiMatching::SemiMatching(const BipartiteGraph& graph, const Capacities& caps)
    : in_matching_(graph.edge_count(), 0),
      deg_u_(graph.nu(), 0),
      deg_v_(graph.nv(), 0),
      f_(caps.f),
      g_(caps.g) {
  caps.check_shape(graph);
}

std::vector<int> SemiMatching::edge_ids() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int e = 0; e < static_cast<int>(in_matching_.size()); ++e)
    if (in_matching_[e]) out.push_back(e);
  return out;
}

std::vector<int> SemiMatching::free_v_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(g_.size()); ++v)
    if (residual_v(v) > 0) out.push_back(v);
  return out;
}

void SemiMatching::toggle_edges(const BipartiteGraph& graph,
                                std::span<const int> ids) {
  for (int e : ids) {
    const Edge& ed = graph.edge(e);
    const int d = in_matching_[e] ? -1 : 1;
    in_matching_[e] ^= 1;
    deg_u_[ed.u] += d;
    deg_v_[ed.v] += d;
    size_ += d;
  }
}

AlternatingPath AlternatingPath::reversed(const SemiMatching& current) const {
  if (length() % 2 != 0)
    throw NotAlternating("only even-length paths reverse onto a V start");
  AlternatingPath out;
  out.vertices.assign(vertices.rbegin(), vertices.rend());
  out.edges.assign(edges.rbegin(), edges.rend());
  out.matched_when_built.reserve(out.edges.size());
  for (int e : out.edges)
    out.matched_when_built.push_back(current.contains(e) ? 1 : 0);
  return out;
}

void validate_alternating(const BipartiteGraph& graph, const SemiMatching& m,
                          const AlternatingPath& path) {
  if (path.vertices.empty()) throw NotAlternating("path has no vertices");
  if (path.vertices.size() != path.edges.size() + 1)
    throw NotAlternating("vertex and edge counts disagree");
  if (path.matched_when_built.size() != path.edges.size())
    throw NotAlternating("matched-flag and edge counts disagree");

  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const int x = path.vertices[i];
    const int bound = (i % 2 == 0) ? graph.nv() : graph.nu();
    if (x < 0 || x >= bound) throw NotAlternating("vertex index out of range");
  }

  std::vector<int> ids = path.edges;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw NotAlternating("repeated edge id");

  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const int e = path.edges[i];
    if (e < 0 || e >= graph.edge_count())
      throw NotAlternating("edge id out of range");
    const Edge& ed = graph.edge(e);
    const int pos_v = (i % 2 == 0) ? i : i + 1;
    const int pos_u = (i % 2 == 0) ? i + 1 : i;
    if (ed.v != path.vertices[pos_v] || ed.u != path.vertices[pos_u])
      throw NotAlternating("edge " + std::to_string(e) +
                           " does not join its path vertices");
    const bool want_matched = (i % 2 == 1);
    if (m.contains(e) != want_matched)
      throw NotAlternating("edges do not alternate unmatched/matched");
    if ((path.matched_when_built[i] != 0) != want_matched)
      throw NotAlternating("stale matched flags");
  }
}

SemiMatching apply_path(const BipartiteGraph& graph, const SemiMatching& m,
                        const AlternatingPath& path) {
  validate_alternating(graph, m, path);
  SemiMatching out = m;
  if (path.edges.empty()) return out;  // length-0 path: no-op
  // The first edge always enters the matching, so the start vertex gains a
  // degree; the end vertex gains one exactly when the length is odd.
  if (m.residual_v(path.start_vertex()) <= 0)
    throw CapacityExhausted("start vertex has no residual capacity");
  if (path.is_augmenting() && m.residual_u(path.end_vertex()) <= 0)
    throw CapacityExhausted("end vertex has no residual capacity");
  out.toggle_edges(graph, path.edges);
  return out;
}

CheckResult check_semi_matching(const BipartiteGraph& graph,
                                const Capacities& caps,
                                std::span<const int> edge_ids) {
  caps.check_shape(graph);
  std::vector<char> chosen(graph.edge_count(), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= graph.edge_count())
      throw InvalidEdge("edge id " + std::to_string(e) + " out of range");
    chosen[e] = 1;
  }

  std::vector<int> du(graph.nu(), 0), dv(graph.nv(), 0);
  std::vector<int> unique_ids;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!chosen[e]) continue;
    unique_ids.push_back(e);
    ++du[graph.edge(e).u];
    ++dv[graph.edge(e).v];
  }

  for (int u = 0; u < graph.nu(); ++u)
    if (du[u] > caps.f[u])
      return {std::nullopt, CapacityViolation{Side::U, u, du[u], caps.f[u]}};
  for (int v = 0; v < graph.nv(); ++v)
    if (dv[v] > caps.g[v])
      return {std::nullopt, CapacityViolation{Side::V, v, dv[v], caps.g[v]}};

  SemiMatching m(graph, caps);
  m.toggle_edges(graph, unique_ids);
  return {std::move(m), std::nullopt};
}

}  // namespace fgsm
