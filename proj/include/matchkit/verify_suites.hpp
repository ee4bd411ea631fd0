#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matchkit {

struct SuiteResult {
  std::string name;
  bool pass = false;
  long long checked = 0;  // how many instances/points the suite examined
  std::string detail;     // first failure, or a short summary
};

// Module invariants.
SuiteResult suite_graph_ops(std::uint64_t seed, int trials);
SuiteResult suite_matching_engine(std::uint64_t seed, int graphs, int max_n);

// Acceptance ingredients (scales are parameters; the acceptance binary
// passes the contractual ones).
SuiteResult suite_extremal_closed_forms();
SuiteResult suite_eg_exhaustive(int max_n);
SuiteResult suite_oracle_equivalence(std::uint64_t seed, int graphs, int max_n);
SuiteResult suite_lemma1_identity(std::uint64_t seed, long long tuples);
SuiteResult suite_delta_lemma(long long min_points);
SuiteResult suite_deficiency_chain(std::uint64_t seed, int graphs, int max_n);
SuiteResult suite_bipartite_extractor(std::uint64_t seed, int per_shape);
SuiteResult suite_swap_family(std::uint64_t seed, int max_p);
SuiteResult suite_theorem2(std::uint64_t seed, int trials);
SuiteResult suite_experiment_grid(std::uint64_t seed);

/// Runs the named suites ("all" for every one) at CLI scales, or at the
/// acceptance scales when `full` is set.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed,
                                    bool full);
std::vector<std::string> suite_names();

}  // namespace matchkit
