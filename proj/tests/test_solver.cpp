#include <thread>
#include <vector>

#include "doctest.h"
#include "fgsm/oracle.hpp"
#include "fgsm/solver.hpp"
#include "test_support.hpp"

using namespace fgsm;
using test_support::make_graph;

TEST_CASE("solve_max: single edge") {
  const BipartiteGraph g = make_graph(1, 1, {{0, 0}});
  const auto [m, stats] = solve_max(g, Capacities::uniform(g, 1, 1));
  CHECK(m.size() == 1);
  CHECK(stats.phase_count() == 1);
  CHECK(stats.phases[0].path_length == 1);
  CHECK(stats.matching_size == 1);
}

TEST_CASE("solve_max: star bounded by the machine capacity") {
  const BipartiteGraph g = make_graph(3, 1, {{0, 0}, {1, 0}, {2, 0}});
  const auto [m, stats] = solve_max(g, Capacities::uniform(g, 1, 2));
  CHECK(m.size() == 2);
}

TEST_CASE("solve_max: perfect on complete 2x2 with capacity 2 everywhere") {
  const BipartiteGraph g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const Capacities caps = Capacities::uniform(g, 2, 2);
  const auto [m, stats] = solve_max(g, caps);
  CHECK(m.size() == 4);
  CHECK(static_cast<long long>(m.size()) == caps.f_total());  // perfect
}

TEST_CASE("solve_max: empty and zero-capacity instances") {
  const BipartiteGraph none = make_graph(3, 3, {});
  const auto r1 = solve_max(none, Capacities::uniform(none, 2, 2));
  CHECK(r1.matching.size() == 0);
  CHECK(r1.stats.phase_count() == 0);

  const BipartiteGraph g = make_graph(2, 2, {{0, 0}, {1, 1}});
  const auto r2 = solve_max(g, Capacities::uniform(g, 0, 1));
  CHECK(r2.matching.size() == 0);
}

TEST_CASE("solve_max: matches the exhaustive oracle on random instances") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = test_support::random_instance(seed, 5, 5, 12, 3, 3);
    const auto result = solve_max(inst.graph, inst.caps);
    const auto brute = brute_force_max(inst.graph, inst.caps);
    CHECK(result.matching.size() == brute.size);
    CHECK(result.stats.within_phase_bound());
    CHECK(result.stats.path_lengths_strictly_increasing());
    CHECK(result.stats.total_augmentations() == result.matching.size());
  }
}

TEST_CASE("solve_max: never exceeds min(f(U), g(V))") {
  for (std::uint64_t seed = 200; seed <= 240; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 18, 3, 3);
    const auto result = solve_max(inst.graph, inst.caps);
    CHECK(result.matching.size() <=
          std::min(inst.caps.f_total(), inst.caps.g_total()));
  }
}

TEST_CASE("solve_max_single: same sizes, one augmentation per record") {
  const BipartiteGraph g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto r = solve_max_single(g, Capacities::uniform(g, 1, 1));
  CHECK(r.matching.size() == 2);
  CHECK(r.stats.phase_count() == 2);  // counts individual augmentations

  for (std::uint64_t seed = 300; seed <= 360; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 15, 3, 3);
    const auto phases = solve_max(inst.graph, inst.caps);
    const auto single = solve_max_single(inst.graph, inst.caps);
    CHECK(single.matching.size() == phases.matching.size());
    CHECK(single.stats.phase_count() == single.matching.size());
    int prev = 0;
    for (const PhaseRecord& rec : single.stats.phases) {
      CHECK(rec.augmentations == 1);
      CHECK(rec.path_length % 2 == 1);
      CHECK(rec.path_length >= prev);  // nondecreasing for shortest paths
      prev = rec.path_length;
    }
  }
}

TEST_CASE("perfectness holds exactly when every U vertex is saturated") {
  for (std::uint64_t seed = 400; seed <= 460; ++seed) {
    const auto inst = test_support::random_instance(seed, 5, 5, 14, 2, 3);
    const auto result = solve_max(inst.graph, inst.caps);
    bool all_saturated = true;
    for (int u = 0; u < inst.graph.nu(); ++u)
      if (result.matching.residual_u(u) > 0) all_saturated = false;
    CHECK((static_cast<long long>(result.matching.size()) ==
           inst.caps.f_total()) == all_saturated);
  }
}

TEST_CASE("solving the mirrored instance gives the same size") {
  for (std::uint64_t seed = 500; seed <= 560; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 16, 3, 3);
    const auto mirror = test_support::mirrored(inst);
    CHECK(solve_max(inst.graph, inst.caps).matching.size() ==
          solve_max(mirror.graph, mirror.caps).matching.size());
  }
}

TEST_CASE("unit capacities reduce to classical maximum matching") {
  for (std::uint64_t seed = 600; seed <= 680; ++seed) {
    const auto inst = test_support::random_instance(seed, 7, 7, 20, 1, 1);
    const Capacities ones = Capacities::uniform(inst.graph, 1, 1);
    CHECK(solve_max(inst.graph, ones).matching.size() ==
          flow_reference_max(inst.graph, ones));
  }
}

TEST_CASE("warm start changes the route, not the size") {
  for (std::uint64_t seed = 700; seed <= 740; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 16, 3, 3);
    const auto cold = solve_max(inst.graph, inst.caps);
    const auto warm = solve_max(inst.graph, inst.caps, SolveOptions{true});
    CHECK(warm.stats.warm_start);
    CHECK(warm.stats.initial_size >= 0);
    CHECK(warm.matching.size() == cold.matching.size());
    // greedy pass alone is a valid semi-matching
    CHECK(warm.stats.initial_size <= warm.matching.size());
  }
}

TEST_CASE("a shifted chain forces one very long augmenting path") {
  // Greedy warm start over the shift edges leaves exactly one augmenting
  // path of length 2n-1 through every vertex; the phase DFS must walk it
  // without recursing.
  const int n = 2000;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < n; ++i) edges.push_back({i, i});
  const BipartiteGraph g(n, n, std::move(edges));
  const Capacities caps = Capacities::uniform(g, 1, 1);

  const auto warm = solve_max(g, caps, SolveOptions{true});
  CHECK(warm.stats.initial_size == n - 1);
  CHECK(warm.matching.size() == n);
  REQUIRE(warm.stats.phase_count() == 1);
  CHECK(warm.stats.phases[0].path_length == 2 * n - 1);
  CHECK(warm.stats.phases[0].augmentations == 1);

  CHECK(solve_max(g, caps).matching.size() == n);
}

TEST_CASE("concurrent solves over one shared graph agree") {
  const auto inst = test_support::random_instance(97, 30, 30, 200, 3, 3);
  const int expected = solve_max(inst.graph, inst.caps).matching.size();

  std::vector<int> sizes(4, -1);
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] {
      sizes[i] = solve_max(inst.graph, inst.caps).matching.size();
    });
  for (auto& w : workers) w.join();
  for (int s : sizes) CHECK(s == expected);
}

TEST_CASE("certify_maximum: solver output certifies, gaps produce witnesses") {
  const BipartiteGraph g = make_graph(1, 1, {{0, 0}});
  const Capacities caps = Capacities::uniform(g, 1, 1);

  const SemiMatching empty(g, caps);
  const auto witness = certify_maximum(g, empty);
  REQUIRE(witness.has_value());
  CHECK(witness->vertices == std::vector<int>{0, 0});
  CHECK(witness->edges == std::vector<int>{0});

  for (std::uint64_t seed = 800; seed <= 840; ++seed) {
    const auto inst = test_support::random_instance(seed, 6, 6, 15, 3, 3);
    SemiMatching m = solve_max(inst.graph, inst.caps).matching;
    CHECK_FALSE(certify_maximum(inst.graph, m).has_value());

    const std::vector<int> ids = m.edge_ids();
    if (ids.empty()) continue;
    // dropping any matched edge reopens an augmenting path
    const int victim = ids[seed % ids.size()];
    const int one[] = {victim};
    m.toggle_edges(inst.graph, one);
    const auto reopened = certify_maximum(inst.graph, m);
    REQUIRE(reopened.has_value());
    // the witness is genuinely augmenting: applying it grows the matching
    const SemiMatching grown = apply_path(inst.graph, m, *reopened);
    CHECK(grown.size() == m.size() + 1);
  }
}
