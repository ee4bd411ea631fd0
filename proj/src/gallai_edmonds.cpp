#include "matchkit/gallai_edmonds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace matchkit {

namespace {

Decomposition assemble(const Graph& g, const std::vector<char>& in_d) {
  Decomposition dec;
  int n = g.order();
  std::vector<char> in_a(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!in_d[v]) continue;
    dec.D.push_back(v);
    for (int w : g.neighbors(v))
      if (!in_d[w]) in_a[w] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    if (in_a[v])
      dec.A.push_back(v);
    else
      dec.C.push_back(v);
  }
  // Components of G[D], discovered from the smallest vertex outward.
  std::vector<char> seen(n, 0);
  for (int start : dec.D) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (in_d[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    dec.components.push_back(std::move(comp));
  }
  return dec;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

}  // namespace

Decomposition decompose(const Graph& g) {
  MatchingStructure st = matching_structure(g);
  return assemble(g, st.even_reachable);
}

Decomposition decompose_by_definition(const Graph& g) {
  int n = g.order();
  int nu = matching_number(g);
  std::vector<char> in_d(n, 0), alive(n, 1);
  for (int u = 0; u < n; ++u) {
    alive[u] = 0;
    in_d[u] = matching_number_masked(g, alive) == nu;
    alive[u] = 1;
  }
  return assemble(g, in_d);
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass; });
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << (c.pass ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  return out.str();
}

VerificationReport verify_decomposition(const Graph& g, const Decomposition& dec) {
  VerificationReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  int n = g.order();

  // Partition of V.
  std::vector<int> tag(n, -1);
  bool disjoint = true;
  auto place = [&](const std::vector<int>& set, int label) {
    for (int v : set) {
      if (v < 0 || v >= n || tag[v] != -1) {
        disjoint = false;
        continue;
      }
      tag[v] = label;
    }
  };
  place(dec.D, 0);
  place(dec.A, 1);
  place(dec.C, 2);
  bool covers = std::all_of(tag.begin(), tag.end(), [](int t) { return t != -1; });
  add("partition", disjoint && covers,
      disjoint ? (covers ? "" : "sets do not cover V") : "sets overlap or leave V");
  if (!(disjoint && covers)) return report;

  int nu = matching_number(g);

  // D = { u : nu(G-u) = nu(G) }.
  {
    bool ok = true;
    std::string detail;
    std::vector<char> alive(n, 1);
    for (int u = 0; u < n && ok; ++u) {
      alive[u] = 0;
      bool avoidable = matching_number_masked(g, alive) == nu;
      alive[u] = 1;
      if (avoidable != (tag[u] == 0)) {
        ok = false;
        detail = "vertex " + std::to_string(u) + (avoidable ? " belongs in D" : " does not belong in D");
      }
    }
    add("D-definition", ok, detail);
  }

  // A = N(D) \ D.
  {
    std::vector<char> expected_a(n, 0);
    for (int v : dec.D)
      for (int w : g.neighbors(v))
        if (tag[w] != 0) expected_a[w] = 1;
    bool ok = true;
    for (int v = 0; v < n; ++v)
      if (expected_a[v] != (tag[v] == 1)) ok = false;
    add("A-definition", ok, ok ? "" : "A differs from N(D) \\ D");
  }

  // Components of G[D].
  {
    Decomposition fresh = assemble(g, [&] {
      std::vector<char> in_d(n, 0);
      for (int v : dec.D) in_d[v] = 1;
      return in_d;
    }());
    add("components", fresh.components == dec.components,
        fresh.components == dec.components ? "" : "component list mismatch");
  }

  // Factor-criticality of every component (all deletions tested).
  {
    bool ok = true;
    std::string detail;
    for (const auto& comp : dec.components) {
      if (comp.size() % 2 == 0) {
        ok = false;
        detail = "component {" + join_ints(comp) + "} has even order";
        break;
      }
      auto [sub, labels] = induced_subgraph(g, comp);
      int half = (sub.order() - 1) / 2;
      std::vector<char> alive(sub.order(), 1);
      for (int v = 0; v < sub.order() && ok; ++v) {
        alive[v] = 0;
        if (matching_number_masked(sub, alive) != half) {
          ok = false;
          detail = "component {" + join_ints(comp) + "} minus vertex " +
                   std::to_string(labels[v]) + " has no perfect matching";
        }
        alive[v] = 1;
      }
      if (!ok) break;
    }
    add("factor-critical", ok, detail);
  }

  // n - 2 nu = k - a.
  {
    bool ok = n - 2 * nu == dec.k() - dec.a();
    add("unsaturated-count", ok,
        ok ? "" : "n-2nu=" + std::to_string(n - 2 * nu) + " but k-a=" + std::to_string(dec.k() - dec.a()));
  }

  // An actual maximum matching splits per the structure theorem.
  {
    std::vector<int> comp_of(n, -1);
    for (std::size_t i = 0; i < dec.components.size(); ++i)
      for (int v : dec.components[i]) comp_of[v] = static_cast<int>(i);
    std::vector<int> mate = maximum_matching_mates(g);
    bool ok = true;
    std::string detail;
    // Every A vertex matched into D, distinct components.
    std::vector<char> hit_component(dec.components.size(), 0);
    for (int u : dec.A) {
      int w = mate[u];
      if (w == -1 || tag[w] != 0) {
        ok = false;
        detail = "A-vertex " + std::to_string(u) + " not matched into D";
        break;
      }
      if (hit_component[comp_of[w]]) {
        ok = false;
        detail = "two A-vertices matched into component " + std::to_string(comp_of[w]);
        break;
      }
      hit_component[comp_of[w]] = 1;
    }
    // C perfectly matched within C.
    if (ok) {
      for (int u : dec.C) {
        int w = mate[u];
        if (w == -1 || tag[w] != 2) {
          ok = false;
          detail = "C-vertex " + std::to_string(u) + " not matched within C";
          break;
        }
      }
    }
    // Each component holds a near-perfect internal matching.
    if (ok) {
      for (std::size_t i = 0; i < dec.components.size() && ok; ++i) {
        const auto& comp = dec.components[i];
        long long internal = 0;
        for (int v : comp) {
          int w = mate[v];
          if (w != -1 && comp_of[w] == static_cast<int>(i)) ++internal;
        }
        internal /= 2;
        if (internal != (static_cast<long long>(comp.size()) - 1) / 2) {
          ok = false;
          detail = "component " + std::to_string(i) + " lacks a near-perfect internal matching";
        }
      }
    }
    add("structured-maximum-matching", ok, detail);
  }

  return report;
}

DecompositionStats decomposition_stats(const Graph& g, const Decomposition& dec) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("decomposition_stats: requires n >= 1");
  DecompositionStats st;
  st.n = n;
  st.s = matching_number(g);
  st.a = dec.a();
  st.c = dec.c();
  st.d = dec.d();
  st.k = dec.k();
  st.x = Rational(st.s - st.a, n);
  st.y = Rational(st.d - st.k, n);
  return st;
}

Graph closure(const Graph& g, const Decomposition& dec) {
  std::vector<Edge> edges = g.edges();
  auto add_clique = [&edges](const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) edges.push_back(make_edge(set[i], set[j]));
  };
  for (const auto& comp : dec.components) add_clique(comp);
  for (int u : dec.D)
    for (int v : dec.A) edges.push_back(make_edge(u, v));
  std::vector<int> ac = dec.A;
  ac.insert(ac.end(), dec.C.begin(), dec.C.end());
  add_clique(ac);
  return Graph(g.order(), edges);  // constructor dedups
}

long long closure_size_formula(const Graph& g, const Decomposition& dec) {
  long long total = 0;
  for (const auto& comp : dec.components) total += choose2(static_cast<long long>(comp.size()));
  total += static_cast<long long>(dec.d()) * dec.a();
  total += choose2(static_cast<long long>(g.order()) - dec.d());
  return total;
}

}  // namespace matchkit
