#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/numbers.hpp"

namespace matchkit {

/// Size caps for the exact counters. Beyond these the operations report
/// "too large" (nullopt) instead of approximating. Machine-dependent, so
/// configurable rather than hard-coded.
struct FeasibilityLimits {
  int max_a = 22;                // inclusion side of the weighted DP
  int max_component_order = 24;  // subset-DP mask width per component
  int brute_max_order = 20;      // plain enumeration fallback
};

struct EnumerationOutcome {
  BigCount emitted = 0;
  bool exhausted = false;  // false when the cap or the sink stopped the stream
};

/// Streams every maximum matching exactly once, in lexicographic edge-set
/// order under the canonical edge order. The sink returns false to stop.
EnumerationOutcome enumerate_maximum_matchings(
    const Graph& g, const std::function<bool(const Matching&)>& sink,
    std::optional<unsigned long long> cap = std::nullopt);

std::vector<Matching> list_maximum_matchings(const Graph& g,
                                             std::optional<std::size_t> cap = std::nullopt);

/// Reference count: walks the same stream without a cap.
BigCount count_maximum_matchings_bruteforce(const Graph& g);

/// Count of maximum matchings containing a given edge of g.
BigCount count_maximum_matchings_through_edge(const Graph& g, Edge e);

/// Exact perfect-matching count by subset DP, component by component.
/// nullopt when a connected component exceeds the configured order cap.
std::optional<BigCount> count_perfect_matchings(const Graph& g,
                                                const FeasibilityLimits& limits = {});

/// Per-vertex counts of perfect matchings of component - v for a
/// factor-critical component, plus their total W. Throws on
/// non-factor-critical input.
struct NearPerfectProfile {
  std::vector<BigCount> per_vertex;
  BigCount total = 0;
};
NearPerfectProfile near_perfect_profile(const Graph& component);

/// Number of matchings saturating every vertex of side_a in a bipartite
/// graph with sides side_a and its complement. Exact (DP over subsets of
/// side_a). Throws if an edge fails to cross the sides.
BigCount count_saturating_bipartite(const Graph& h, const std::vector<int>& side_a);

/// Decomposition-factored count: PM(G[C]) times the weighted sum over
/// A-saturating matchings into pairwise distinct components of G[D],
/// with the unhit components contributing their near-perfect totals.
/// nullopt when a subproblem exceeds the limits.
std::optional<BigCount> count_maximum_matchings_decomposed(const Graph& g,
                                                           const Decomposition& dec,
                                                           const FeasibilityLimits& limits = {});
std::optional<BigCount> count_maximum_matchings_decomposed(const Graph& g,
                                                           const FeasibilityLimits& limits = {});

}  // namespace matchkit
