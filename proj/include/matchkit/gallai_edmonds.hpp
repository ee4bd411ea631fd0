#pragma once

#include <string>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/numbers.hpp"

namespace matchkit {

/// Gallai-Edmonds partition of V(G): D holds the vertices missed by some
/// maximum matching, A their outside neighbors, C the rest, plus the
/// components of G[D] (each factor-critical, odd order).
struct Decomposition {
  std::vector<int> D, A, C;                 // each sorted ascending
  std::vector<std::vector<int>> components;  // of G[D], ordered by smallest vertex

  int d() const { return static_cast<int>(D.size()); }
  int a() const { return static_cast<int>(A.size()); }
  int c() const { return static_cast<int>(C.size()); }
  int k() const { return static_cast<int>(components.size()); }

  bool operator==(const Decomposition& other) const = default;
};

/// Scalars of the decomposition: s = nu(G)n, and the exact rationals
/// x = nu - a/n, y = (d - k)/n. Requires n >= 1.
struct DecompositionStats {
  int n = 0, s = 0, a = 0, c = 0, d = 0, k = 0;
  Rational x, y;
};

/// Via the engine's final alternating-tree structure (one run).
Decomposition decompose(const Graph& g);

/// Literal definition: D = { u : nu(G-u) = nu(G) }, one matching
/// computation per vertex. The oracle for `decompose`.
Decomposition decompose_by_definition(const Graph& g);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> checks;
  bool all_pass() const;
  std::string summary() const;
};

/// Checks every axiom of the decomposition: partition, the D definition,
/// A = N(D) \ D, components, factor-criticality, the unsaturated-count
/// identity n - 2 nu = k - a, and that an actual maximum matching splits
/// into per-component near-perfect parts, an A-into-distinct-components
/// part, and a perfect matching on C. Failures are report entries.
VerificationReport verify_decomposition(const Graph& g, const Decomposition& dec);

DecompositionStats decomposition_stats(const Graph& g, const Decomposition& dec);

/// G*: G plus all missing edges inside each component of G[D], between D
/// and A, and inside A u C. Keeps the decomposition and matching number.
Graph closure(const Graph& g, const Decomposition& dec);

/// Size of G* in closed form: sum_i C(n_i,2) + d*a + C(n-d,2).
long long closure_size_formula(const Graph& g, const Decomposition& dec);

}  // namespace matchkit
