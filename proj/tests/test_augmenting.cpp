#include <set>
#include <vector>

#include "doctest.h"
#include "fgsm/augmenting.hpp"
#include "fgsm/solver.hpp"
#include "test_support.hpp"

using namespace fgsm;
using test_support::make_graph;

TEST_CASE("layered_bfs: forced layering on a single edge") {
  const BipartiteGraph g = make_graph(1, 1, {{0, 0}});
  const SemiMatching m(g, Capacities::uniform(g, 1, 1));
  const LayerStructure ls = layered_bfs(g, m);
  REQUIRE(ls.t.has_value());
  CHECK(*ls.t == 1);
  CHECK(ls.layers[0] == std::vector<int>{0});
  CHECK(ls.layers[1] == std::vector<int>{0});
  CHECK(ls.layer_v[0] == 0);
  CHECK(ls.layer_u[0] == 1);
}

TEST_CASE("layered_bfs: saturated branch yields no augmenting layer") {
  // u0~v0, u0~v1 with f(u0)=1 and u0v0 matched: no augmenting path exists,
  // confirmed by exhaustive path enumeration.
  const BipartiteGraph g = make_graph(1, 2, {{0, 0}, {0, 1}});
  const Capacities caps = Capacities::uniform(g, 1, 1);
  const CheckResult m = check_semi_matching(g, caps, std::vector<int>{0});
  REQUIRE_FALSE(test_support::exists_augmenting_path(g, *m.matching));

  const LayerStructure ls = layered_bfs(g, *m.matching);
  CHECK_FALSE(ls.t.has_value());
  CHECK(ls.layers[0] == std::vector<int>{1});  // only v1 has residual
  CHECK(ls.layers[1] == std::vector<int>{0});
  CHECK(ls.layers[2] == std::vector<int>{0});  // v0 over the matched edge
  CHECK(ls.layer_v[0] == 2);
}

TEST_CASE("layered_bfs: endpoint with leftover residual seeds layer 0") {
  // two tasks into one machine with g(v0)=2 and u0v0 matched: the machine
  // still has residual, so (v0,u1) is augmenting per enumeration.
  const BipartiteGraph g = make_graph(2, 1, {{0, 0}, {1, 0}});
  Capacities caps = Capacities::uniform(g, 1, 2);
  const CheckResult m = check_semi_matching(g, caps, std::vector<int>{0});
  REQUIRE(test_support::exists_augmenting_path(g, *m.matching));

  const LayerStructure ls = layered_bfs(g, *m.matching);
  REQUIRE(ls.t.has_value());
  CHECK(*ls.t == 1);
  CHECK(ls.layers[0] == std::vector<int>{0});
  CHECK(ls.layers[1] == std::vector<int>{1});  // u0's edge is matched
  CHECK(ls.layer_u[0] == LayerStructure::kNoLayer);
}

TEST_CASE("adist: definitional cases") {
  const BipartiteGraph g = make_graph(1, 1, {{0, 0}});
  const SemiMatching empty(g, Capacities::uniform(g, 1, 1));
  const LayerStructure ls = layered_bfs(g, empty);
  CHECK(adist(g, empty, ls, Side::V, 0) == 0);
  CHECK(adist(g, empty, ls, Side::U, 0) == 1);
}

TEST_CASE("adist: matched edge walks back to the saturated machine") {
  const BipartiteGraph g = make_graph(1, 2, {{0, 0}, {0, 1}});
  const Capacities caps = Capacities::uniform(g, 1, 1);
  const CheckResult m = check_semi_matching(g, caps, std::vector<int>{0});
  const LayerStructure ls = layered_bfs(g, *m.matching);
  CHECK(adist(g, *m.matching, ls, Side::V, 0) == 2);
  // agrees with the exhaustive enumeration of alternating paths
  const auto oracle = test_support::enumerate_adist(g, *m.matching);
  CHECK(oracle.dist_v[0] == 2);
  CHECK(oracle.dist_u[0] == 1);
}

TEST_CASE("adist: truncated structure recomputes beyond t on demand") {
  // Two components: a free single edge (t = 1) and a matched chain whose
  // deeper V vertex only appears in an untruncated layering.
  const BipartiteGraph g = make_graph(2, 3, {{0, 0}, {1, 1}, {1, 2}});
  const Capacities caps = Capacities::uniform(g, 1, 1);
  const CheckResult m = check_semi_matching(g, caps, std::vector<int>{1});

  const LayerStructure truncated = layered_bfs(g, *m.matching);
  REQUIRE(truncated.t.has_value());
  CHECK(*truncated.t == 1);
  CHECK(truncated.layer_v[1] == LayerStructure::kNoLayer);

  CHECK(adist(g, *m.matching, truncated, Side::V, 1) == 2);
  CHECK(adist_full(g, *m.matching, Side::V, 1) == 2);

  const LayerStructure full = layered_bfs(g, *m.matching, /*truncate=*/false);
  CHECK_FALSE(full.truncated);
  CHECK(full.layer_v[1] == 2);
  CHECK(full.adist(Side::V, 1) == 2);

  // layers agree with the definitional oracle everywhere
  const auto oracle = test_support::enumerate_adist(g, *m.matching);
  for (int u = 0; u < g.nu(); ++u) CHECK(full.adist(Side::U, u) == oracle.dist_u[u]);
  for (int v = 0; v < g.nv(); ++v) CHECK(full.adist(Side::V, v) == oracle.dist_v[v]);
}

TEST_CASE("run_phase: complete 2x2 exhausts both length-1 paths") {
  const BipartiteGraph g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const Capacities caps = Capacities::uniform(g, 1, 1);
  SemiMatching m(g, caps);
  const LayerStructure ls = layered_bfs(g, m);
  REQUIRE(ls.t.has_value());
  CHECK(*ls.t == 1);
  std::vector<AlternatingPath> paths;
  const int augs = run_phase(g, m, ls, &paths);
  CHECK(augs == 2);
  CHECK(m.size() == 2);
  REQUIRE(paths.size() == 2);
  for (const auto& p : paths) CHECK(p.length() == 1);
}

TEST_CASE("run_phase: multi-capacity machine absorbs all three tasks") {
  const BipartiteGraph g = make_graph(3, 1, {{0, 0}, {1, 0}, {2, 0}});
  const Capacities caps = Capacities::uniform(g, 1, 3);
  SemiMatching m(g, caps);
  const LayerStructure ls = layered_bfs(g, m);
  CHECK(run_phase(g, m, ls) == 3);
  CHECK(m.size() == 3);
}

TEST_CASE("run_phase: throws on a maximum matching") {
  const BipartiteGraph g = make_graph(1, 1, {{0, 0}});
  const Capacities caps = Capacities::uniform(g, 1, 1);
  const CheckResult m = check_semi_matching(g, caps, std::vector<int>{0});
  const LayerStructure ls = layered_bfs(g, *m.matching);
  REQUIRE_FALSE(ls.t.has_value());
  SemiMatching copy = *m.matching;
  CHECK_THROWS_AS(run_phase(g, copy, ls), PhaseOnMaximum);
}

TEST_CASE("run_phase: every path has length t, valid alternation, disjoint edges") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 16, 3, 3);
    SemiMatching m(inst.graph, inst.caps);
    SemiMatching shadow = m;
    while (true) {
      const LayerStructure ls = layered_bfs(inst.graph, m);
      if (!ls.t) break;
      std::vector<AlternatingPath> paths;
      const int augs = run_phase(inst.graph, m, ls, &paths);
      CHECK(augs == static_cast<int>(paths.size()));
      CHECK(augs >= 1);
      std::set<int> phase_edges;
      for (const auto& p : paths) {
        CHECK(p.length() == *ls.t);
        // apply_path validates the alternation against the shadow state
        shadow = apply_path(inst.graph, shadow, p);
        for (int e : p.edges) CHECK(phase_edges.insert(e).second);
      }
      CHECK(shadow.edge_ids() == m.edge_ids());
    }
    REQUIRE_FALSE(test_support::exists_augmenting_path(inst.graph, m));
  }
}

TEST_CASE("adist never decreases under a shortest augmentation") {
  int pairs = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 14, 3, 3);
    SemiMatching m(inst.graph, inst.caps);
    while (true) {
      const LayerStructure ls = layered_bfs(inst.graph, m);
      if (!ls.t) break;
      const LayerStructure before = layered_bfs(inst.graph, m, false);
      const auto path = find_augmenting_path(inst.graph, m, ls);
      REQUIRE(path.has_value());
      CHECK(path->length() == *ls.t);
      m.toggle_edges(inst.graph, path->edges);
      const LayerStructure after = layered_bfs(inst.graph, m, false);
      for (int u = 0; u < inst.graph.nu(); ++u)
        CHECK(before.adist(Side::U, u) <= after.adist(Side::U, u));
      for (int v = 0; v < inst.graph.nv(); ++v)
        CHECK(before.adist(Side::V, v) <= after.adist(Side::V, v));
      ++pairs;
    }
  }
  CHECK(pairs >= 50);
}

TEST_CASE("phase progress: shortest length strictly increases by 2 or more") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = test_support::random_instance(seed, 7, 7, 20, 3, 3);
    const SolveStats stats = solve_max(inst.graph, inst.caps).stats;
    CHECK(stats.path_lengths_strictly_increasing());
    for (std::size_t i = 1; i < stats.phases.size(); ++i)
      CHECK(stats.phases[i].path_length >= stats.phases[i - 1].path_length + 2);
  }
}
