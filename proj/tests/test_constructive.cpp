#include <doctest.h>

#include <set>

#include "matchkit/constructive.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/graph.hpp"
#include "oracles.hpp"

using namespace matchkit;

namespace {

std::vector<int> left_side(int a) {
  std::vector<int> side(a);
  for (int i = 0; i < a; ++i) side[i] = i;
  return side;
}

}  // namespace

TEST_CASE("fixed-mode extraction on intact complete bipartite graphs") {
  {
    ExtractionReport r = extract_bipartite_family(complete_bipartite(3, 10), left_side(3));
    CHECK(r.target_bound == 7);  // ceil(10-3.3) falling min{ceil(0.6), 7} = 7^1
    CHECK(r.emitted >= r.target_bound);
    CHECK(r.emitted <= 720);  // 10*9*8 saturating matchings in total
    CHECK(r.hypotheses_pass());
  }
  {
    ExtractionReport r = extract_bipartite_family(complete_bipartite(1, 4), left_side(1));
    CHECK(r.target_bound == 3);  // ceil(4-1.1) falling 1
    CHECK(r.emitted == 3);
    CHECK(r.emitted <= 4);
  }
}

TEST_CASE("parameterized extraction") {
  ExtractionReport r = extract_bipartite_family(complete_bipartite(2, 10), left_side(2),
                                                ExtractionMode::parameterized, Rational(2, 5),
                                                Rational(1, 100));
  CHECK(r.target_bound == 42);  // ceil(0.7*10) falling ceil(0.7*2) = 7*6
  CHECK(r.emitted == 56);       // both vertices reassigned into the 8 free partners
  CHECK(r.emitted >= r.target_bound);
  CHECK(r.hypotheses_pass());
  long long oracle = [] {
    Graph h = complete_bipartite(2, 10);
    return static_cast<long long>(count_saturating_bipartite(h, {0, 1}).convert_to<long long>());
  }();
  CHECK(oracle == 90);
  CHECK(r.emitted <= oracle);

  CHECK_THROWS_AS(extract_bipartite_family(complete_bipartite(2, 10), left_side(2),
                                           ExtractionMode::parameterized, Rational(3, 2),
                                           Rational(1, 100)),
                  std::invalid_argument);
}

TEST_CASE("extraction needs a saturating matching") {
  Graph starved(3, {{0, 2}, {1, 2}});  // two A-vertices share the only partner
  CHECK_THROWS_AS(extract_bipartite_family(starved, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(extract_bipartite_family(complete_graph(3), {0}), std::invalid_argument);
}

TEST_CASE("best-effort extraction when the graph is far below the size bound") {
  // Five A-vertices, each with exactly one private partner among seven:
  // no candidate has free neighbors, the size bound 25m < 25ak - 2a^2
  // explains the shortage, and only the base matching family remains.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
  Graph h(12, edges);
  ExtractionReport r = extract_bipartite_family(h, left_side(5));
  CHECK_FALSE(r.hypotheses_pass());
  CHECK(r.a_prime.empty());
  CHECK(r.emitted == 1);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] == r.base_matching);
  bool shortage_recorded = false;
  for (const auto& c : r.hypothesis_checks)
    if (c.name == "candidate set covers 0.2a" && !c.pass) shortage_recorded = true;
  CHECK(shortage_recorded);
}

TEST_CASE("witnesses are valid, distinct, and saturate the side") {
  Graph h = remove_edges(complete_bipartite(4, 9), {{0, 4}, {1, 5}});
  ExtractionReport r = extract_bipartite_family(h, left_side(4), 12);
  CHECK(!r.witnesses.empty());
  std::set<std::vector<Edge>> seen;
  for (const Matching& w : r.witnesses) {
    MatchingValidation v = validate_matching(h, w, MatchMode::any);
    CHECK(v.is_matching);
    std::vector<char> hit(h.order(), 0);
    for (const auto& [p, q] : w.edges) hit[p] = hit[q] = 1;
    for (int u = 0; u < 4; ++u) CHECK(hit[u]);
    CHECK(seen.insert(w.edges).second);
  }
}

TEST_CASE("swap graph construction") {
  {
    SwapFamily fam = build_swap_family(complete_graph(6),
                                       Matching::of(complete_graph(6), {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(fam.swap_graph == complete_graph(3));
  }
  {
    Graph k4_minus = remove_edges(complete_graph(4), {{0, 2}});
    SwapFamily fam = build_swap_family(k4_minus, Matching::of(k4_minus, {{0, 1}, {2, 3}}));
    // the swap needs {0,3} and {1,2}, both still present
    CHECK(fam.swap_graph.size() == 1);
  }
  CHECK_THROWS_AS(build_swap_family(complete_graph(5),
                                    Matching::of(complete_graph(5), {{0, 1}, {2, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_swap_family(complete_graph(4), Matching::of(complete_graph(4), {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("swap emission: order, counts, validity") {
  Graph k6 = complete_graph(6);
  Matching base = Matching::of(k6, {{0, 1}, {2, 3}, {4, 5}});
  SwapFamily fam = build_swap_family(k6, base);

  std::vector<Matching> outs;
  EmitOutcome outcome = emit_swap_matchings(fam, [&](const Matching& m) {
    outs.push_back(m);
    return true;
  });
  CHECK(outcome.exhausted);
  CHECK(outcome.emitted == 4);  // empty swap set plus the three single swaps
  REQUIRE(!outs.empty());
  CHECK(outs[0] == base);  // N = {} reproduces the base matching

  std::set<std::vector<Edge>> seen;
  for (const Matching& m : outs) {
    CHECK(validate_matching(k6, m, MatchMode::perfect).meets_mode);
    CHECK(seen.insert(m.edges).second);
  }
  CHECK(BigCount(static_cast<long long>(outs.size())) <= *count_perfect_matchings(k6));

  // K_8 with the analogous base: swap graph K_4 has 10 matchings.
  Graph k8 = complete_graph(8);
  SwapFamily fam8 = build_swap_family(k8, Matching::of(k8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  EmitOutcome outcome8 = emit_swap_matchings(fam8, [](const Matching&) { return true; });
  CHECK(outcome8.emitted == 10);

  EmitOutcome capped = emit_swap_matchings(fam8, [](const Matching&) { return true; }, 4);
  CHECK(capped.emitted == 4);
  CHECK_FALSE(capped.exhausted);
}

TEST_CASE("swap family injectivity, exhaustively for small p") {
  for (int p = 2; p <= 5; ++p) {
    Graph k = complete_graph(2 * p);
    std::vector<Edge> base_edges;
    for (int i = 0; i < p; ++i) base_edges.push_back({2 * i, 2 * i + 1});
    // drop one non-base edge to make the swap graph incomplete
    k = remove_edges(k, {{0, 2}});
    SwapFamily fam = build_swap_family(k, Matching::of(k, base_edges));

    std::set<std::vector<Edge>> images;
    EmitOutcome outcome = emit_swap_matchings(fam, [&](const Matching& m) {
      CHECK(images.insert(m.edges).second);
      return true;
    });
    CHECK(outcome.exhausted);
    CHECK(BigCount(static_cast<long long>(images.size())) == outcome.emitted);
    CHECK(outcome.emitted <= *count_perfect_matchings(k));
  }
}
