#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/numbers.hpp"

namespace matchkit {

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class ExtractionMode { fixed, parameterized };

/// Result of pulling a family of A-saturating matchings out of a
/// near-complete bipartite graph. `emitted` is the exact family size (the
/// number of injective reassignments of the rematched vertices into free
/// partners); witnesses carry up to `witness_cap` of them materialized.
struct ExtractionReport {
  ExtractionMode mode = ExtractionMode::fixed;
  BigCount target_bound = 0;  // what the bound promises when hypotheses hold
  BigCount emitted = 0;
  Matching base_matching;
  std::vector<int> a_prime;    // candidate vertices, selection order
  std::vector<int> rematched;  // prefix of a_prime actually reassigned
  std::vector<Matching> witnesses;
  std::vector<HypothesisCheck> hypothesis_checks;
  bool hypotheses_pass() const;
};

/// Fixed mode: candidates need free-degree >= k - 1.1a and the bound is
/// ceil(k-1.1a) falling min{ceil(0.2a), ceil(k-1.1a)}. Parameterized mode:
/// candidates need degree >= (1-sqrt(gamma))k and the bound is
/// ceil((1-sqrt(gamma)-eps/2)k) falling ceil((1-sqrt(gamma)-eps/2)a).
/// Thresholds are evaluated exactly (squared comparisons, no floats).
/// Hypothesis violations are recorded and extraction proceeds best-effort;
/// the absence of an A-saturating matching is an error.
ExtractionReport extract_bipartite_family(const Graph& h, const std::vector<int>& side_a,
                                          ExtractionMode mode, const Rational& eps,
                                          const Rational& gamma, std::size_t witness_cap = 16);
ExtractionReport extract_bipartite_family(const Graph& h, const std::vector<int>& side_a,
                                          std::size_t witness_cap = 16);

/// Swap structure over a perfect matching M = {x_1y_1, ..., x_py_p} of a
/// near-complete graph: the auxiliary graph joins indices i, j exactly when
/// both cross edges x_iy_j and x_jy_i are present, so each of its matchings
/// encodes a set of disjoint pair swaps.
struct SwapFamily {
  Graph host;
  Matching base;
  std::vector<std::pair<int, int>> pairs;  // (x_i, y_i), x_i < y_i
  Graph swap_graph;                        // on p vertices
  std::vector<int> x_set;
  long long high_degree_count = 0;  // |{v : deg >= 0.895 p}|
  bool x_condition_verified = false;
  BigCount target_bound = 0;  // ceil(0.447 p)!
  std::vector<HypothesisCheck> hypothesis_checks;
  bool hypotheses_pass() const;
};

SwapFamily build_swap_family(const Graph& k_graph, const Matching& m);

struct EmitOutcome {
  BigCount emitted = 0;
  bool exhausted = false;
};

/// Streams M(N) over all matchings N of the swap graph, the empty one
/// first and then in lexicographic index order. Every output is validated
/// as a perfect matching of the host.
EmitOutcome emit_swap_matchings(const SwapFamily& fam,
                                const std::function<bool(const Matching&)>& sink,
                                std::optional<unsigned long long> cap = std::nullopt);

}  // namespace matchkit
