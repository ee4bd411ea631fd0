#pragma once

#include <cstdint>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Matching number by dynamic programming over vertex subsets.
/// A deliberately independent route from the augmenting-path engine, kept
/// for cross-checks; usable up to n around 24.
int reference_matching_number(const Graph& g);

/// Same, on raw adjacency bitmasks (adj[v] = neighbor mask). Lets sweeps
/// over all labeled graphs avoid building Graph values.
int reference_matching_number(const std::vector<std::uint32_t>& adj, int n);

}  // namespace matchkit
