#include <doctest.h>

#include <random>

#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/harness.hpp"
#include "matchkit/matching.hpp"

using namespace matchkit;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph cycle5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

Graph random_graph(std::mt19937_64& rng, int n, int permille) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bounded_random(rng, 1000) < static_cast<std::uint64_t>(permille))
        edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("decompositions of the canonical small graphs") {
  Decomposition p3 = decompose(path3());
  CHECK(p3.D == std::vector<int>{0, 2});
  CHECK(p3.A == std::vector<int>{1});
  CHECK(p3.C.empty());
  CHECK(p3.components == std::vector<std::vector<int>>{{0}, {2}});

  Decomposition k4 = decompose(complete_graph(4));
  CHECK(k4.D.empty());
  CHECK(k4.A.empty());
  CHECK(k4.C == std::vector<int>{0, 1, 2, 3});

  Decomposition c5 = decompose(cycle5());
  CHECK(c5.D == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(c5.A.empty());
  CHECK(c5.components.size() == 1);
  CHECK(c5.components[0].size() == 5);

  // Empty graph: every vertex is avoidable, components are singletons.
  Decomposition isolated = decompose(empty_graph(4));
  CHECK(isolated.D == std::vector<int>{0, 1, 2, 3});
  CHECK(isolated.k() == 4);
  CHECK(decompose(empty_graph(0)).D.empty());
}

TEST_CASE("definitional oracle gives identical structures") {
  for (const Graph& g : {path3(), complete_graph(4), cycle5(), empty_graph(4),
                         extremal_i(8, 3), extremal_ii(9, 3)}) {
    CHECK(decompose(g) == decompose_by_definition(g));
  }
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(rng, 1 + static_cast<int>(bounded_random(rng, 11)),
                           100 + static_cast<int>(bounded_random(rng, 850)));
    CHECK(decompose(g) == decompose_by_definition(g));
  }
}

TEST_CASE("verification accepts correct decompositions and flags corrupted ones") {
  Graph c5 = cycle5();
  Decomposition good = decompose(c5);
  CHECK(verify_decomposition(c5, good).all_pass());

  Decomposition bad = good;
  bad.A = {0};
  bad.D = {1, 2, 3, 4};
  bad.components = {{1, 2, 3, 4}};
  VerificationReport report = verify_decomposition(c5, bad);
  CHECK_FALSE(report.all_pass());
  bool d_def_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "D-definition" && !c.pass) d_def_failed = true;
  CHECK(d_def_failed);

  Decomposition uncovered;  // leaves all of K_4 unplaced
  VerificationReport coverage = verify_decomposition(complete_graph(4), uncovered);
  CHECK_FALSE(coverage.all_pass());
  CHECK(coverage.checks[0].name == "partition");
  CHECK_FALSE(coverage.checks[0].pass);
}

TEST_CASE("stats of the canonical small graphs") {
  Graph c5 = cycle5();
  DecompositionStats st = decomposition_stats(c5, decompose(c5));
  CHECK(st.n == 5);
  CHECK(st.s == 2);
  CHECK(st.a == 0);
  CHECK(st.k == 1);
  CHECK(st.x == Rational(2, 5));
  CHECK(st.y == Rational(4, 5));
  CHECK(st.y <= 2 * st.x);

  DecompositionStats p3 = decomposition_stats(path3(), decompose(path3()));
  CHECK(p3.x == 0);
  CHECK(p3.y == 0);

  DecompositionStats k4 = decomposition_stats(complete_graph(4), decompose(complete_graph(4)));
  CHECK(k4.x == Rational(1, 2));
  CHECK(k4.y == 0);
  CHECK(k4.k == 0);

  CHECK_THROWS_AS(decomposition_stats(empty_graph(0), decompose(empty_graph(0))),
                  std::invalid_argument);
}

TEST_CASE("closure completes the decomposition parts") {
  Graph c5 = cycle5();
  CHECK(closure(c5, decompose(c5)) == complete_graph(5));

  Graph p3 = path3();
  Decomposition dec = decompose(p3);
  CHECK(closure(p3, dec) == p3);
  CHECK(closure_size_formula(p3, dec) == 2);

  Graph k4 = complete_graph(4);
  CHECK(closure(k4, decompose(k4)) == k4);
}

TEST_CASE("closure preserves matching number and decomposition, sizes match the formula") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(rng, 1 + static_cast<int>(bounded_random(rng, 10)),
                           100 + static_cast<int>(bounded_random(rng, 800)));
    Decomposition dec = decompose(g);
    Graph star = closure(g, dec);
    CHECK(star.size() == closure_size_formula(g, dec));
    CHECK(star.size() >= g.size());
    CHECK(matching_number(star) == matching_number(g));
    CHECK(decompose(star) == dec);

    // Unsaturated-count identity and odd components.
    CHECK(g.order() - 2 * matching_number(g) == dec.k() - dec.a());
    for (const auto& comp : dec.components) CHECK(comp.size() % 2 == 1);
  }
}
