#include "matchkit/reference.hpp"

#include <bit>
#include <stdexcept>

namespace matchkit {

int reference_matching_number(const std::vector<std::uint32_t>& adj, int n) {
  if (n > 24) throw std::invalid_argument("reference_matching_number: order above 24");
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);  // v left unmatched
    std::int8_t value = best[rest];
    std::uint32_t cand = adj[v] & rest;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      std::int8_t with = static_cast<std::int8_t>(1 + best[rest & ~(std::uint32_t{1} << w)]);
      if (with > value) value = with;
    }
    best[mask] = value;
  }
  return best[(std::uint32_t{1} << n) - 1];
}

int reference_matching_number(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  return reference_matching_number(adj, g.order());
}

}  // namespace matchkit
