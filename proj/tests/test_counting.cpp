#include <doctest.h>

#include <random>
#include <set>

#include "matchkit/counting.hpp"
#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/harness.hpp"
#include "oracles.hpp"

using namespace matchkit;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n, int permille) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bounded_random(rng, 1000) < static_cast<std::uint64_t>(permille))
        edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("enumeration order, caps, and fixed counts") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto matchings = list_maximum_matchings(p4);
  REQUIRE(matchings.size() == 1);
  CHECK(matchings[0].edges == std::vector<Edge>{{0, 1}, {2, 3}});

  auto c5 = list_maximum_matchings(cycle(5));
  CHECK(c5.size() == 5);
  for (std::size_t i = 1; i < c5.size(); ++i) CHECK(c5[i - 1].edges < c5[i].edges);

  auto empty3 = list_maximum_matchings(empty_graph(3));
  REQUIRE(empty3.size() == 1);
  CHECK(empty3[0].edges.empty());

  EnumerationOutcome capped = enumerate_maximum_matchings(
      cycle(5), [](const Matching&) { return true; }, 2);
  CHECK(capped.emitted == 2);
  CHECK_FALSE(capped.exhausted);

  EnumerationOutcome full = enumerate_maximum_matchings(
      cycle(5), [](const Matching&) { return true; }, std::nullopt);
  CHECK(full.emitted == 5);
  CHECK(full.exhausted);
}

TEST_CASE("brute-force counts of the closed-form families") {
  CHECK(count_maximum_matchings_bruteforce(complete_graph(4)) == 3);
  CHECK(count_maximum_matchings_bruteforce(extremal_i(5, 1)) == 4);
  CHECK(count_maximum_matchings_bruteforce(extremal_ii(6, 2)) == 15);
}

TEST_CASE("perfect matching counts") {
  CHECK(*count_perfect_matchings(complete_graph(4)) == 3);
  CHECK(*count_perfect_matchings(complete_graph(6)) == 15);
  CHECK(*count_perfect_matchings(complete_graph(5)) == 0);
  CHECK(*count_perfect_matchings(cycle(5)) == 0);
  CHECK(*count_perfect_matchings(empty_graph(0)) == 1);
  CHECK(*count_perfect_matchings(disjoint_union(complete_graph(2), complete_graph(2))) == 1);
  // One even component without a perfect matching kills the product.
  CHECK(*count_perfect_matchings(disjoint_union(empty_graph(2), complete_graph(2))) == 0);

  for (int p = 1; p <= 6; ++p) {
    BigCount formula = big_factorial(2 * p) / (big_factorial(p) * (BigCount(1) << p));
    CHECK(*count_perfect_matchings(complete_graph(2 * p)) == formula);
  }

  FeasibilityLimits tight;
  tight.max_component_order = 3;
  CHECK_FALSE(count_perfect_matchings(complete_graph(4), tight).has_value());

  std::mt19937_64 rng(44);
  for (int t = 0; t < 40; ++t) {
    int n = 2 * (1 + static_cast<int>(bounded_random(rng, 4)));
    Graph g = random_graph(rng, n, 200 + static_cast<int>(bounded_random(rng, 700)));
    CHECK(*count_perfect_matchings(g) == test::oracle_count_perfect_matchings(g));
  }
}

TEST_CASE("near-perfect profiles agree with the recursion oracle") {
  std::mt19937_64 rng(45);
  int found = 0;
  while (found < 12) {
    int n = 3 + 2 * static_cast<int>(bounded_random(rng, 3));
    Graph g = random_graph(rng, n, 550 + static_cast<int>(bounded_random(rng, 400)));
    NearPerfectProfile profile;
    try {
      profile = near_perfect_profile(g);
    } catch (const std::invalid_argument&) {
      continue;  // not factor-critical; try another draw
    }
    ++found;
    for (int v = 0; v < n; ++v) {
      Graph reduced = delete_vertices(g, {v}).graph;
      CHECK(profile.per_vertex[v] == test::oracle_count_perfect_matchings(reduced));
    }
  }
}

TEST_CASE("near-perfect profiles") {
  NearPerfectProfile k3 = near_perfect_profile(complete_graph(3));
  CHECK(k3.per_vertex == std::vector<BigCount>{1, 1, 1});
  CHECK(k3.total == 3);

  NearPerfectProfile c5 = near_perfect_profile(cycle(5));
  CHECK(c5.total == 5);
  for (const auto& count : c5.per_vertex) CHECK(count == 1);

  NearPerfectProfile k5 = near_perfect_profile(complete_graph(5));
  CHECK(k5.total == 15);
  for (const auto& count : k5.per_vertex) CHECK(count == 3);

  CHECK(near_perfect_profile(complete_graph(1)).total == 1);
  CHECK_THROWS_AS(near_perfect_profile(Graph(3, {{0, 1}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(near_perfect_profile(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("saturating-matching counts in bipartite graphs") {
  {
    Graph h = complete_bipartite(2, 3);
    CHECK(count_saturating_bipartite(h, {0, 1}) == 6);
  }
  {
    Graph h = complete_bipartite(1, 4);
    CHECK(count_saturating_bipartite(h, {0}) == 4);
  }
  {
    // K_{3,3} minus a perfect matching: derangements of three elements.
    Graph h = remove_edges(complete_bipartite(3, 3), {{0, 3}, {1, 4}, {2, 5}});
    CHECK(count_saturating_bipartite(h, {0, 1, 2}) == 2);
  }
  CHECK_THROWS_AS(count_saturating_bipartite(complete_graph(3), {0}), std::invalid_argument);
}

TEST_CASE("decomposition-factored counts on fixed graphs") {
  CHECK(*count_maximum_matchings_decomposed(cycle(5)) == 5);
  CHECK(*count_maximum_matchings_decomposed(Graph(3, {{0, 1}, {1, 2}})) == 2);
  CHECK(*count_maximum_matchings_decomposed(extremal_i(7, 2)) == 20);

  FeasibilityLimits tiny;
  tiny.max_component_order = 3;
  CHECK_FALSE(count_maximum_matchings_decomposed(cycle(5), tiny).has_value());
  tiny.max_component_order = 24;
  tiny.max_a = 0;
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(count_maximum_matchings_decomposed(p3, tiny).has_value());
}

TEST_CASE("factored counts equal brute force and the recursion oracle") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(bounded_random(rng, 14));
    Graph g = random_graph(rng, n, 100 + static_cast<int>(bounded_random(rng, 850)));
    BigCount brute = count_maximum_matchings_bruteforce(g);
    auto factored = count_maximum_matchings_decomposed(g);
    REQUIRE(factored.has_value());
    CHECK(*factored == brute);
    if (n <= 8) CHECK(brute == test::oracle_count_maximum_matchings(g));
  }
  for (int n = 4; n <= 14; ++n)
    for (int s = 1; 2 * s <= n && s <= 5; ++s) {
      CHECK(*count_maximum_matchings_decomposed(extremal_i(n, s)) ==
            count_maximum_matchings_bruteforce(extremal_i(n, s)));
      if (2 * s + 1 <= n)
        CHECK(*count_maximum_matchings_decomposed(extremal_ii(n, s)) ==
              count_maximum_matchings_bruteforce(extremal_ii(n, s)));
    }
}

TEST_CASE("maximum matchings respect the distinct-components rule") {
  // In every maximum matching, the A-vertices are matched into D hitting
  // pairwise distinct components; checked by full enumeration.
  std::mt19937_64 rng(42);
  int with_a = 0;
  while (with_a < 10) {
    int n = 4 + static_cast<int>(bounded_random(rng, 6));
    Graph g = random_graph(rng, n, 250 + static_cast<int>(bounded_random(rng, 400)));
    Decomposition dec = decompose(g);
    if (dec.a() == 0) continue;
    ++with_a;
    std::vector<int> tag(n, -1), comp_of(n, -1);
    for (int v : dec.D) tag[v] = 0;
    for (int v : dec.A) tag[v] = 1;
    for (std::size_t i = 0; i < dec.components.size(); ++i)
      for (int v : dec.components[i]) comp_of[v] = static_cast<int>(i);
    for (const Matching& m : list_maximum_matchings(g)) {
      std::set<int> hit;
      for (const auto& [u, v] : m.edges) {
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
          if (tag[x] == 1) {
            CHECK(tag[y] == 0);                       // A matched into D
            CHECK(hit.insert(comp_of[y]).second);     // distinct components
          }
        }
      }
      CHECK(hit.size() == static_cast<std::size_t>(dec.a()));
    }
  }
}

TEST_CASE("counts through an edge explain removal losses") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    int n = 3 + static_cast<int>(bounded_random(rng, 7));
    Graph g = random_graph(rng, n, 400);
    if (g.size() == 0) continue;
    Edge e = g.edges()[bounded_random(rng, g.size())];
    Graph without = remove_edges(g, {e});
    if (matching_number(without) != matching_number(g)) continue;
    CHECK(count_maximum_matchings_bruteforce(without) ==
          count_maximum_matchings_bruteforce(g) - count_maximum_matchings_through_edge(g, e));
  }
}
