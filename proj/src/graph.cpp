#include "matchkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matchkit {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("edge endpoints coincide: " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, const std::vector<Edge>& pairs) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                  "} out of range for order " + std::to_string(n));
    }
    edges_.push_back(make_edge(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int probe = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), probe);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, e);
}

Graph extremal_i(int n, int s) {
  if (s < 0 || s > n) throw std::invalid_argument("extremal_i: requires 0 <= s <= n");
  return complement(disjoint_union(complete_graph(n - s), empty_graph(s)));
}

Graph extremal_ii(int n, int s) {
  if (s < 0 || 2 * s + 1 > n) throw std::invalid_argument("extremal_ii: requires 2s+1 <= n");
  return disjoint_union(complete_graph(2 * s + 1), empty_graph(n - 2 * s - 1));
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) e.push_back({u, v});
  return Graph(n, e);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> e = g1.edges();
  int shift = g1.order();
  for (const auto& [u, v] : g2.edges()) e.push_back({u + shift, v + shift});
  return Graph(g1.order() + g2.order(), e);
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& to_remove) {
  std::vector<Edge> gone;
  gone.reserve(to_remove.size());
  for (const auto& [a, b] : to_remove) {
    Edge e = make_edge(a, b);
    if (!g.has_edge(e.first, e.second)) {
      throw std::invalid_argument("remove_edges: {" + std::to_string(a) + "," +
                                  std::to_string(b) + "} is not an edge");
    }
    gone.push_back(e);
  }
  std::sort(gone.begin(), gone.end());
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
  return Graph(g.order(), kept);
}

VertexDeletion induced_subgraph(const Graph& g, const std::vector<int>& kept) {
  std::vector<int> keep = kept;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> new_label(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    new_label[v] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges())
    if (new_label[u] >= 0 && new_label[v] >= 0) e.push_back({new_label[u], new_label[v]});
  return VertexDeletion{Graph(static_cast<int>(keep.size()), e), std::move(keep)};
}

VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& dropped) {
  std::vector<char> drop(g.order(), 0);
  for (int v : dropped) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("delete_vertices: vertex " + std::to_string(v) + " out of range");
    drop[v] = 1;
  }
  std::vector<int> kept;
  for (int v = 0; v < g.order(); ++v)
    if (!drop[v]) kept.push_back(v);
  return induced_subgraph(g, kept);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("edge list: empty input");
  long long n = 0, m = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m)) throw std::invalid_argument("edge list: malformed header '" + line + "'");
    std::string rest;
    if (hdr >> rest) throw std::invalid_argument("edge list: trailing content in header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header field");
  }
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  long long read = 0;
  while (std::getline(in, line)) {
    if (line.empty() && in.eof()) break;
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v)) throw std::invalid_argument("edge list: malformed line '" + line + "'");
    std::string rest;
    if (row >> rest) throw std::invalid_argument("edge list: trailing content in line '" + line + "'");
    if (u >= v) throw std::invalid_argument("edge list: pair not normalized (u < v required): '" + line + "'");
    pairs.push_back({static_cast<int>(u), static_cast<int>(v)});
    ++read;
  }
  if (read != m) {
    throw std::invalid_argument("edge list: header declares " + std::to_string(m) +
                                " edges but body has " + std::to_string(read));
  }
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("edge list: duplicate edge");
  return Graph(static_cast<int>(n), pairs);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize_edge_list(g);
}

}  // namespace matchkit
