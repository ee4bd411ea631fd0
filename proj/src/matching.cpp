#include "matchkit/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace matchkit {

namespace {

// Classic augmenting-path search with blossom contraction (base[] keeps the
// contracted-blossom representative). One call explores the alternating tree
// rooted at one exposed vertex; `even` ends up marking all vertices reached
// at even depth, with contracted blossoms absorbed into the even class.
class BlossomSolver {
 public:
  BlossomSolver(const Graph& g, const std::vector<char>* alive)
      : g_(g), n_(g.order()), alive_(alive) {
    mate_.assign(n_, -1);
    parent_.assign(n_, -1);
    base_.resize(n_);
    even_.assign(n_, 0);
    in_blossom_.assign(n_, 0);
    lca_mark_.assign(n_, 0);
  }

  bool is_alive(int v) const { return alive_ == nullptr || (*alive_)[v]; }

  void greedy_init() {
    for (int v = 0; v < n_; ++v) {
      if (!is_alive(v) || mate_[v] != -1) continue;
      for (int w : g_.neighbors(v)) {
        if (is_alive(w) && mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
  }

  int solve() {
    greedy_init();
    int matched = 0;
    for (int v = 0; v < n_; ++v)
      if (is_alive(v) && mate_[v] != -1) ++matched;
    for (int v = 0; v < n_; ++v) {
      if (!is_alive(v) || mate_[v] != -1) continue;
      int tail = find_path(v);
      if (tail != -1) {
        augment(tail);
        matched += 2;
      }
    }
    return matched / 2;
  }

  // After solve(): union of even-reachable sets over all exposed roots.
  std::vector<char> structure_marks() {
    std::vector<char> marks(n_, 0);
    for (int v = 0; v < n_; ++v) {
      if (!is_alive(v) || mate_[v] != -1) continue;
      int tail = find_path(v);
      if (tail != -1) throw std::logic_error("structure pass found an augmenting path");
      for (int u = 0; u < n_; ++u)
        if (even_[u]) marks[u] = 1;
    }
    return marks;
  }

  const std::vector<int>& mates() const { return mate_; }

 private:
  int lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    a = base_[a];
    while (true) {
      lca_mark_[a] = 1;
      if (mate_[a] == -1) break;
      a = base_[parent_[mate_[a]]];
    }
    b = base_[b];
    while (!lca_mark_[b]) b = base_[parent_[mate_[b]]];
    return b;
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Grows the alternating tree from `root`; returns the exposed tail of an
  // augmenting path, or -1. On -1, even_ marks the outer vertices of the
  // tree.
  int find_path(int root) {
    std::fill(even_.begin(), even_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);

    even_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (!is_alive(to)) continue;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Two even vertices meet: contract the blossom.
          int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!is_alive(i)) continue;
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!even_[i]) {
                even_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          even_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int tail) {
    while (tail != -1) {
      int pv = parent_[tail];
      int next = mate_[pv];
      mate_[tail] = pv;
      mate_[pv] = tail;
      tail = next;
    }
  }

  const Graph& g_;
  int n_;
  const std::vector<char>* alive_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> even_, in_blossom_, lca_mark_;
};

}  // namespace

Matching Matching::of(const Graph& g, std::vector<Edge> pairs) {
  for (auto& e : pairs) e = make_edge(e.first, e.second);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Matching{std::move(pairs), g.order()};
}

int matching_number(const Graph& g) {
  BlossomSolver solver(g, nullptr);
  return solver.solve();
}

int matching_number_masked(const Graph& g, const std::vector<char>& alive) {
  BlossomSolver solver(g, &alive);
  return solver.solve();
}

std::vector<int> maximum_matching_mates(const Graph& g) {
  BlossomSolver solver(g, nullptr);
  solver.solve();
  return solver.mates();
}

MatchingStructure matching_structure(const Graph& g) {
  BlossomSolver solver(g, nullptr);
  int size = solver.solve();
  MatchingStructure out;
  out.even_reachable = solver.structure_marks();
  out.mate = solver.mates();
  out.matching_size = size;
  return out;
}

Matching maximum_matching(const Graph& g) {
  int target = matching_number(g);
  std::vector<char> alive(g.order(), 1);
  std::vector<Edge> forced;
  forced.reserve(target);
  for (const auto& [u, v] : g.edges()) {
    if (static_cast<int>(forced.size()) == target) break;
    if (!alive[u] || !alive[v]) continue;
    alive[u] = alive[v] = 0;
    // Keep the edge iff the rest still completes a maximum matching.
    if (matching_number_masked(g, alive) == target - static_cast<int>(forced.size()) - 1) {
      forced.push_back({u, v});
    } else {
      alive[u] = alive[v] = 1;
    }
  }
  if (static_cast<int>(forced.size()) != target)
    throw std::logic_error("canonical matching construction fell short");
  return Matching::of(g, std::move(forced));
}

MatchingValidation validate_matching(const Graph& g, const Matching& m, MatchMode mode) {
  MatchingValidation out;
  if (m.host_order != g.order()) {
    out.note = "matching was built against a graph of different order";
    return out;
  }
  std::vector<char> hit(g.order(), 0);
  for (const auto& [u, v] : m.edges) {
    if (!g.has_edge(u, v)) {
      out.note = "pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of the graph";
      return out;
    }
    if (hit[u] || hit[v]) {
      out.note = "shared vertex in pairs at {" + std::to_string(u) + "," + std::to_string(v) + "}";
      return out;
    }
    hit[u] = hit[v] = 1;
  }
  out.is_matching = true;
  switch (mode) {
    case MatchMode::any:
      out.meets_mode = true;
      break;
    case MatchMode::perfect:
      out.meets_mode = 2 * m.size() == g.order();
      if (!out.meets_mode) out.note = "matching is not perfect";
      break;
    case MatchMode::maximum:
      out.meets_mode = m.size() == matching_number(g);
      if (!out.meets_mode) out.note = "matching is not maximum";
      break;
  }
  return out;
}

}  // namespace matchkit
