#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matchkit/counting.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/serialize.hpp"

namespace matchkit {

// Reproducibility helpers. The random source is std::mt19937_64 (fully
// specified by the standard) fed through splitmix64-derived per-sample
// seeds, with rejection sampling for bounded draws; no implementation-
// defined distributions are used, so replays agree across platforms.
std::uint64_t splitmix64(std::uint64_t state);
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound);
std::uint64_t sample_seed(std::uint64_t base_seed, std::size_t cell_index,
                          std::size_t sample_index);

enum class CountingMethod { brute, decomposed, auto_select };
std::string to_string(CountingMethod method);
CountingMethod counting_method_from_string(const std::string& name);

struct GridCell {
  int n = 0;
  int s = 0;
  long long delta = 0;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::vector<GridCell> grid;
  int samples_per_cell = 1;
  CountingMethod counting_method = CountingMethod::auto_select;
  FeasibilityLimits limits;
  std::size_t max_witnesses = 4;
  int retry_budget = 500;
  bool trace_removals = true;
  unsigned long long family_cap = 2000;  // cap on constructive streams per record
};
ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& cfg);

struct RemovalStep {
  Edge removed;
  // Exact audit of the loss: after = before - through, where `through`
  // counts maximum matchings using the removed edge, computed on the
  // smaller graph. Filled only when tracing is on and the order permits.
  BigCount count_before = 0, through_edge = 0, count_after = 0;
};

struct SampledInstance {
  Graph graph;
  std::string family;       // extremal_i | extremal_ii | complete_degenerate
  bool degenerate = false;  // 2s = n, where family (ii) does not fit
  long long removed = 0;
  std::vector<RemovalStep> trace;
};

/// Starts from the denser applicable extremal family for (n, s), removes up
/// to `delta` random edges, rejecting any removal that changes the matching
/// number. Throws std::runtime_error when the retry budget runs out.
SampledInstance sample_near_extremal(int n, int s, long long delta, std::uint64_t seed,
                                     int retry_budget = 500, bool trace = false,
                                     int trace_max_order = 20);

/// Closed-form count of maximum matchings for the sampled family at
/// delta = 0.
BigCount family_closed_form(int n, int s, const std::string& family);

struct ExperimentResult {
  std::vector<Json> records;  // one per sample, deterministic under the seed
  Json summary;               // aggregate + timing; not part of the replayable stream
  bool all_ok = true;
};
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string records_to_jsonl(const std::vector<Json>& records);

}  // namespace matchkit
