#pragma once

#include <string>
#include <utility>
#include <vector>

namespace matchkit {

/// Normalized unordered pair, u < v.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored sorted and deduplicated, so two graphs compare equal
/// exactly when they are the same labeled graph, and serialization is
/// bit-exact.
class Graph {
 public:
  Graph() = default;
  /// Pairs may come in any order or orientation; they are normalized and
  /// deduplicated. Throws std::invalid_argument on self-loops or endpoints
  /// outside 0..n-1.
  Graph(int n, const std::vector<Edge>& pairs);

  int order() const { return n_; }
  long long size() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Generators.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
/// Extremal family (i): complement of K_{n-s} u \bar{K_s}, i.e. a clique of
/// size s completely joined to an independent set of size n-s. Built
/// literally by complementing. Requires 0 <= s <= n.
Graph extremal_i(int n, int s);
/// Extremal family (ii): K_{2s+1} plus n-2s-1 isolated vertices.
/// Requires 2s+1 <= n.
Graph extremal_ii(int n, int s);

// Pure operations; every result is a fresh immutable value.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph remove_edges(const Graph& g, const std::vector<Edge>& to_remove);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_label;  // old_label[new] = original vertex
};
/// Induced subgraph on V \ dropped, relabeled order-preservingly.
VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& dropped);
/// Induced subgraph on `kept` (need not be sorted), relabeled
/// order-preservingly.
VertexDeletion induced_subgraph(const Graph& g, const std::vector<int>& kept);

// Edge-list text format. Line 1 is "<n> <m>"; then m lines "<u> <v>" with
// u < v, sorted lexicographically, LF endings, trailing newline required.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace matchkit
