#pragma once

#include <string>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

enum class MatchMode { any, perfect, maximum };

/// Set of pairwise vertex-disjoint edges of a host graph. Stores the host
/// order so validation can reject matchings presented against the wrong
/// graph.
struct Matching {
  std::vector<Edge> edges;  // sorted, normalized
  int host_order = 0;

  static Matching of(const Graph& g, std::vector<Edge> pairs);
  int size() const { return static_cast<int>(edges.size()); }

  bool operator==(const Matching& other) const = default;
};

/// nu(G), by augmenting paths with blossom contraction.
int matching_number(const Graph& g);

/// nu of the subgraph induced on {v : alive[v]}.
int matching_number_masked(const Graph& g, const std::vector<char>& alive);

/// The lexicographically smallest maximum matching under the canonical
/// edge order. Deterministic; costs one extra engine run per scanned edge,
/// which is fine at the scales this toolkit targets.
Matching maximum_matching(const Graph& g);

/// Raw engine output as a mate array (mate[v] = -1 when exposed).
/// Deterministic for a fixed graph but not canonical.
std::vector<int> maximum_matching_mates(const Graph& g);

/// Byproduct of the final engine phase: `reachable[v]` marks vertices
/// reachable from some exposed vertex by an even alternating walk
/// (blossoms absorbed). These are exactly the vertices missed by some
/// maximum matching.
struct MatchingStructure {
  std::vector<int> mate;
  std::vector<char> even_reachable;
  int matching_size = 0;
};
MatchingStructure matching_structure(const Graph& g);

struct MatchingValidation {
  bool is_matching = false;  // edges exist in g and are disjoint
  bool meets_mode = false;
  std::string note;
};
MatchingValidation validate_matching(const Graph& g, const Matching& m, MatchMode mode);

}  // namespace matchkit
