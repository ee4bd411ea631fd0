#include "matchkit/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace matchkit {

namespace {

struct MaxMatchingWalker {
  const Graph& g;
  int target;
  const std::function<bool(const Matching&)>* sink;  // null: count only
  std::optional<unsigned long long> cap;
  unsigned long long emitted = 0;
  bool stopped = false;
  std::vector<char> used;
  std::vector<Edge> chosen;

  explicit MaxMatchingWalker(const Graph& graph, int nu,
                             const std::function<bool(const Matching&)>* out,
                             std::optional<unsigned long long> limit)
      : g(graph), target(nu), sink(out), cap(limit), used(graph.order(), 0) {}

  void walk(std::size_t from) {
    if (stopped) return;
    if (static_cast<int>(chosen.size()) == target) {
      ++emitted;
      if (sink != nullptr && !(*sink)(Matching{chosen, g.order()})) stopped = true;
      if (cap && emitted >= *cap) stopped = true;
      return;
    }
    const auto& edges = g.edges();
    std::size_t need = static_cast<std::size_t>(target) - chosen.size();
    for (std::size_t i = from; i + need <= edges.size() && !stopped; ++i) {
      const auto& [u, v] = edges[i];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      chosen.push_back(edges[i]);
      walk(i + 1);
      chosen.pop_back();
      used[u] = used[v] = 0;
    }
  }
};

// Perfect-matching counts for every even-cardinality vertex subset of a
// small graph, computed in one sweep. Even masks are indexed by their low
// n-1 bits (the top bit is forced by parity). Values stay within uint64:
// the count on <= 26 vertices is at most 25!! < 2^63.
class PerfectMatchingTable {
 public:
  PerfectMatchingTable(std::vector<std::uint32_t> adj, int n) : n_(n), adj_(std::move(adj)) {
    if (n > 26) throw std::invalid_argument("perfect-matching DP: order above 26 unsupported");
    std::size_t slots = n == 0 ? 1 : (std::size_t{1} << (n - 1));
    table_.assign(slots, 0);
    table_[0] = 1;
    low_mask_ = n == 0 ? 0 : ((std::uint32_t{1} << (n - 1)) - 1);
    for (std::size_t idx = 1; idx < slots; ++idx) {
      std::uint32_t mask = expand(static_cast<std::uint32_t>(idx));
      int low = std::countr_zero(mask);
      std::uint32_t rest = mask & (mask - 1);
      std::uint64_t total = 0;
      std::uint32_t cand = adj_[low] & rest;
      while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        total += table_[(rest & ~(std::uint32_t{1} << w)) & low_mask_];
      }
      table_[idx] = total;
    }
  }

  std::uint64_t count(std::uint32_t even_mask) const { return table_[even_mask & low_mask_]; }

  std::uint64_t full_count() const {
    if (n_ % 2 != 0) return 0;
    return count(n_ == 0 ? 0 : ((std::uint32_t{1} << n_) - 1));
  }

 private:
  std::uint32_t expand(std::uint32_t idx) const {
    bool odd = (std::popcount(idx) & 1) != 0;
    return idx | (odd ? (std::uint32_t{1} << (n_ - 1)) : 0);
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint32_t low_mask_;
  std::vector<std::uint64_t> table_;
};

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  return adj;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

EnumerationOutcome enumerate_maximum_matchings(
    const Graph& g, const std::function<bool(const Matching&)>& sink,
    std::optional<unsigned long long> cap) {
  MaxMatchingWalker walker(g, matching_number(g), &sink, cap);
  if (cap && *cap == 0) return EnumerationOutcome{BigCount(0), false};
  walker.walk(0);
  return EnumerationOutcome{BigCount(walker.emitted), !walker.stopped};
}

std::vector<Matching> list_maximum_matchings(const Graph& g, std::optional<std::size_t> cap) {
  std::vector<Matching> out;
  std::optional<unsigned long long> limit;
  if (cap) limit = static_cast<unsigned long long>(*cap);
  enumerate_maximum_matchings(
      g,
      [&out](const Matching& m) {
        out.push_back(m);
        return true;
      },
      limit);
  return out;
}

BigCount count_maximum_matchings_bruteforce(const Graph& g) {
  MaxMatchingWalker walker(g, matching_number(g), nullptr, std::nullopt);
  walker.walk(0);
  return BigCount(walker.emitted);
}

BigCount count_maximum_matchings_through_edge(const Graph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("count through edge: not an edge of the graph");
  int nu = matching_number(g);
  std::vector<char> alive(g.order(), 1);
  alive[e.first] = alive[e.second] = 0;
  if (matching_number_masked(g, alive) != nu - 1) return 0;
  auto [rest, labels] = delete_vertices(g, {e.first, e.second});
  return count_maximum_matchings_bruteforce(rest);
}

std::optional<BigCount> count_perfect_matchings(const Graph& g, const FeasibilityLimits& limits) {
  if (g.order() % 2 != 0) return BigCount(0);
  BigCount total = 1;
  for (const auto& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) > limits.max_component_order) return std::nullopt;
    auto [sub, labels] = induced_subgraph(g, comp);
    PerfectMatchingTable table(adjacency_masks(sub), sub.order());
    std::uint64_t count = table.full_count();
    if (count == 0) return BigCount(0);
    total *= count;
  }
  return total;
}

NearPerfectProfile near_perfect_profile(const Graph& component) {
  int n = component.order();
  if (n % 2 == 0)
    throw std::invalid_argument("near_perfect_profile: factor-critical graphs have odd order");
  PerfectMatchingTable table(adjacency_masks(component), n);
  std::uint32_t full = n == 0 ? 0 : ((std::uint32_t{1} << n) - 1);
  NearPerfectProfile profile;
  profile.per_vertex.reserve(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t count = table.count(full & ~(std::uint32_t{1} << v));
    if (count == 0)
      throw std::invalid_argument("near_perfect_profile: input is not factor-critical (vertex " +
                                  std::to_string(v) + ")");
    profile.per_vertex.emplace_back(count);
    profile.total += count;
  }
  return profile;
}

BigCount count_saturating_bipartite(const Graph& h, const std::vector<int>& side_a) {
  std::vector<char> in_a(h.order(), 0);
  for (int v : side_a) {
    if (v < 0 || v >= h.order())
      throw std::invalid_argument("count_saturating_bipartite: side vertex out of range");
    in_a[v] = 1;
  }
  for (const auto& [u, v] : h.edges())
    if (in_a[u] == in_a[v])
      throw std::invalid_argument("count_saturating_bipartite: edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} does not cross the sides");
  int a = 0;
  std::vector<int> index_of(h.order(), -1);
  for (int v = 0; v < h.order(); ++v)
    if (in_a[v]) index_of[v] = a++;
  if (a > 26) throw std::invalid_argument("count_saturating_bipartite: side above 26 unsupported");

  // One pass per opposite-side vertex; f[mask] = ways to saturate exactly
  // `mask` of side A with the columns seen so far.
  std::vector<BigCount> f(std::size_t{1} << a);
  f[0] = 1;
  for (int c = 0; c < h.order(); ++c) {
    if (in_a[c]) continue;
    std::uint32_t nbr = 0;
    for (int w : h.neighbors(c)) nbr |= std::uint32_t{1} << index_of[w];
    if (nbr == 0) continue;
    for (std::uint32_t mask = (std::uint32_t{1} << a) - 1; mask > 0; --mask) {
      std::uint32_t cand = nbr & mask;
      while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        f[mask] += f[mask & ~(std::uint32_t{1} << u)];
      }
    }
  }
  return f[(std::uint32_t{1} << a) - 1];
}

std::optional<BigCount> count_maximum_matchings_decomposed(const Graph& g, const Decomposition& dec,
                                                           const FeasibilityLimits& limits) {
  if (dec.a() > limits.max_a) return std::nullopt;
  for (const auto& comp : dec.components)
    if (static_cast<int>(comp.size()) > limits.max_component_order) return std::nullopt;

  auto [c_part, c_labels] = induced_subgraph(g, dec.C);
  std::optional<BigCount> pm_c = count_perfect_matchings(c_part, limits);
  if (!pm_c) return std::nullopt;

  // Near-perfect profiles, plus the weight of matching an A-vertex into a
  // given component: sum of PM(G_i - v) over neighbors v in the component.
  int a = dec.a();
  std::vector<int> slot(g.order(), -1);
  for (int i = 0; i < a; ++i) slot[dec.A[i]] = i;

  std::vector<BigCount> f(std::size_t{1} << a);
  f[0] = 1;
  for (const auto& comp : dec.components) {
    auto [sub, labels] = induced_subgraph(g, comp);
    NearPerfectProfile profile = near_perfect_profile(sub);
    std::vector<BigCount> weight(a, 0);
    for (int local = 0; local < sub.order(); ++local) {
      for (int w : g.neighbors(labels[local]))
        if (slot[w] >= 0) weight[slot[w]] += profile.per_vertex[local];
    }
    // Each component either stays unhit (weight W_i) or is hit by exactly
    // one A-vertex; in-place update keeps the pre-component values intact
    // for strictly smaller masks.
    for (std::uint32_t mask = (std::uint32_t{1} << a) - 1;; --mask) {
      BigCount next = f[mask] * profile.total;
      std::uint32_t cand = mask;
      while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        if (!weight[u].is_zero()) next += f[mask & ~(std::uint32_t{1} << u)] * weight[u];
      }
      f[mask] = std::move(next);
      if (mask == 0) break;
    }
  }
  return f[(std::uint32_t{1} << a) - 1] * *pm_c;
}

std::optional<BigCount> count_maximum_matchings_decomposed(const Graph& g,
                                                           const FeasibilityLimits& limits) {
  return count_maximum_matchings_decomposed(g, decompose(g), limits);
}

}  // namespace matchkit
