#include "matchkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "matchkit/bounds.hpp"
#include "matchkit/constructive.hpp"

namespace matchkit {

std::uint64_t splitmix64(std::uint64_t state) {
  state += 0x9E3779B97F4A7C15ULL;
  state = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ULL;
  state = (state ^ (state >> 27)) * 0x94D049BB133111EBULL;
  return state ^ (state >> 31);
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded_random: zero bound");
  std::uint64_t residue = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - residue;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

std::uint64_t sample_seed(std::uint64_t base_seed, std::size_t cell_index,
                          std::size_t sample_index) {
  return splitmix64(splitmix64(base_seed ^ splitmix64(cell_index + 1)) ^ (sample_index + 1));
}

std::string to_string(CountingMethod method) {
  switch (method) {
    case CountingMethod::brute: return "brute";
    case CountingMethod::decomposed: return "decomposed";
    case CountingMethod::auto_select: return "auto";
  }
  return "?";
}

CountingMethod counting_method_from_string(const std::string& name) {
  if (name == "brute") return CountingMethod::brute;
  if (name == "decomposed") return CountingMethod::decomposed;
  if (name == "auto") return CountingMethod::auto_select;
  throw std::invalid_argument("unknown counting method '" + name + "'");
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig cfg;
  cfg.seed = j.value("seed", std::uint64_t{0});
  for (const auto& cell : j.at("grid")) {
    cfg.grid.push_back({cell.at("n").get<int>(), cell.at("s").get<int>(),
                        cell.value("delta", 0LL)});
  }
  cfg.samples_per_cell = j.value("samples_per_cell", 1);
  cfg.counting_method = counting_method_from_string(j.value("counting_method", "auto"));
  if (j.contains("limits")) {
    const auto& l = j.at("limits");
    cfg.limits.max_a = l.value("max_a", cfg.limits.max_a);
    cfg.limits.max_component_order = l.value("max_component_order", cfg.limits.max_component_order);
    cfg.limits.brute_max_order = l.value("brute_max_order", cfg.limits.brute_max_order);
  }
  cfg.max_witnesses = j.value("max_witnesses", cfg.max_witnesses);
  cfg.retry_budget = j.value("retry_budget", cfg.retry_budget);
  cfg.trace_removals = j.value("trace_removals", cfg.trace_removals);
  cfg.family_cap = j.value("family_cap", cfg.family_cap);
  return cfg;
}

Json config_to_json(const ExperimentConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  Json grid = Json::array();
  for (const auto& cell : cfg.grid) {
    Json c;
    c["n"] = cell.n;
    c["s"] = cell.s;
    c["delta"] = cell.delta;
    grid.push_back(c);
  }
  j["grid"] = grid;
  j["samples_per_cell"] = cfg.samples_per_cell;
  j["counting_method"] = to_string(cfg.counting_method);
  j["limits"] = Json{{"max_a", cfg.limits.max_a},
                     {"max_component_order", cfg.limits.max_component_order},
                     {"brute_max_order", cfg.limits.brute_max_order}};
  j["max_witnesses"] = cfg.max_witnesses;
  j["retry_budget"] = cfg.retry_budget;
  j["trace_removals"] = cfg.trace_removals;
  j["family_cap"] = cfg.family_cap;
  return j;
}

SampledInstance sample_near_extremal(int n, int s, long long delta, std::uint64_t seed,
                                     int retry_budget, bool trace, int trace_max_order) {
  if (s < 0 || 2 * s > n)
    throw std::invalid_argument("sample_near_extremal: requires 0 <= 2s <= n");
  if (delta < 0) throw std::invalid_argument("sample_near_extremal: negative deficiency budget");

  SampledInstance out;
  if (s > 0 && 2 * s == n) {
    // Family (ii) needs 2s+1 <= n; at the boundary the complete graph is
    // the densest graph with matching number s.
    out.graph = complete_graph(n);
    out.family = "complete_degenerate";
    out.degenerate = true;
  } else if (eg_branch(n, s) == EgBranch::split) {
    out.graph = extremal_i(n, s);
    out.family = "extremal_i";
  } else {
    out.graph = extremal_ii(n, s);
    out.family = "extremal_ii";
  }

  bool do_trace = trace && n <= trace_max_order;
  std::mt19937_64 rng(seed);
  int attempts = 0;
  while (out.removed < delta) {
    if (attempts >= retry_budget)
      throw std::runtime_error("sample_near_extremal: retry budget exhausted after " +
                               std::to_string(attempts) + " attempts (n=" + std::to_string(n) +
                               ", s=" + std::to_string(s) + ", delta=" + std::to_string(delta) + ")");
    if (out.graph.size() == 0)
      throw std::runtime_error("sample_near_extremal: no edges left to remove");
    ++attempts;
    Edge victim = out.graph.edges()[bounded_random(rng, out.graph.size())];
    Graph candidate = remove_edges(out.graph, {victim});
    if (matching_number(candidate) != s) continue;
    RemovalStep step;
    step.removed = victim;
    if (do_trace) {
      step.count_before = count_maximum_matchings_bruteforce(out.graph);
      step.through_edge = count_maximum_matchings_through_edge(out.graph, victim);
      step.count_after = count_maximum_matchings_bruteforce(candidate);
    }
    out.trace.push_back(std::move(step));
    out.graph = std::move(candidate);
    ++out.removed;
  }
  return out;
}

BigCount family_closed_form(int n, int s, const std::string& family) {
  if (family == "extremal_i") return extremal_count_i(n, s);
  if (family == "extremal_ii") return extremal_count_ii(n, s);
  if (family == "complete_degenerate") {
    // Maximum matchings of K_n at n = 2s are its perfect matchings.
    return big_factorial(2 * s) / (big_factorial(s) * (BigCount(1) << s));
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

namespace {

struct ConstructiveSummary {
  Json json;
  bool ok = true;
};

// Case 1 pipeline: restrict to the A-to-components bipartite structure,
// keeping one representative per component (the matched vertex where the
// maximum matching enters the component), and run the fixed-mode extractor.
ConstructiveSummary run_case1(const Graph& g, const Decomposition& dec,
                              const std::vector<int>& mates, std::size_t witness_cap) {
  ConstructiveSummary out;
  int n = g.order();
  std::vector<int> comp_of(n, -1);
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    for (int v : dec.components[i]) comp_of[v] = static_cast<int>(i);

  std::vector<int> rep(dec.components.size(), -1);
  for (int u : dec.A) {
    int w = mates[u];
    if (w >= 0 && comp_of[w] >= 0) rep[comp_of[w]] = w;
  }
  for (std::size_t i = 0; i < rep.size(); ++i)
    if (rep[i] == -1) rep[i] = dec.components[i][0];

  // Bipartite graph on A (0..a-1) and the representatives (a..a+k-1),
  // with only the A-to-D edges of g.
  int a = dec.a();
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (std::size_t j = 0; j < rep.size(); ++j)
      if (g.has_edge(dec.A[i], rep[j])) edges.push_back({i, a + static_cast<int>(j)});
  Graph h(a + static_cast<int>(rep.size()), edges);
  std::vector<int> side(a);
  for (int i = 0; i < a; ++i) side[i] = i;

  ExtractionReport report = extract_bipartite_family(h, side, witness_cap);
  out.json["kind"] = "bipartite_case1";
  out.json["report"] = extraction_to_json(report);
  out.ok = report.emitted >= report.target_bound || !report.hypotheses_pass();

  // Each witness must extend to a maximum matching of g: near-perfect
  // matchings inside the components, the witness across, a perfect
  // matching on C from the engine's matching.
  int extended_checked = 0;
  bool extensions_ok = true;
  for (const auto& witness : report.witnesses) {
    std::vector<Edge> full;
    for (const auto& [p, q] : witness.edges) {
      int u = std::min(p, q), r = std::max(p, q);  // u in A-labels, r a representative
      full.push_back(make_edge(dec.A[u], rep[r - a]));
    }
    // Inside each component the representative is the one vertex skipped,
    // whether the witness attaches there or leaves it exposed.
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      auto [sub, labels] = induced_subgraph(g, dec.components[i]);
      int local_exposed = -1;
      for (std::size_t l = 0; l < labels.size(); ++l)
        if (labels[l] == rep[i]) local_exposed = static_cast<int>(l);
      Graph masked = delete_vertices(sub, {local_exposed}).graph;
      std::vector<int> sub_labels;
      for (std::size_t l = 0; l < labels.size(); ++l)
        if (static_cast<int>(l) != local_exposed) sub_labels.push_back(labels[l]);
      std::vector<int> near = maximum_matching_mates(masked);
      for (int v = 0; v < masked.order(); ++v)
        if (near[v] > v) full.push_back(make_edge(sub_labels[v], sub_labels[near[v]]));
    }
    for (int u : dec.C)
      if (mates[u] > u) full.push_back(make_edge(u, mates[u]));
    Matching extended = Matching::of(g, full);
    MatchingValidation check = validate_matching(g, extended, MatchMode::maximum);
    if (!check.is_matching || !check.meets_mode) extensions_ok = false;
    ++extended_checked;
  }
  out.json["extensions_checked"] = extended_checked;
  out.json["extensions_ok"] = extensions_ok;
  out.ok = out.ok && extensions_ok;
  return out;
}

// Cases 2 and 3: swap family on the near-complete even part (G[C], or the
// largest component minus the vertex the maximum matching leaves out).
ConstructiveSummary run_swap_case(const Graph& g, const Decomposition& dec,
                                  const std::vector<int>& mates, bool on_c_part,
                                  unsigned long long cap) {
  ConstructiveSummary out;
  std::vector<int> keep;
  if (on_c_part) {
    keep = dec.C;
  } else {
    if (dec.components.empty()) {
      out.json["kind"] = "swap_case3";
      out.json["skipped"] = "no components";
      return out;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < dec.components.size(); ++i)
      if (dec.components[i].size() > dec.components[best].size()) best = i;
    const auto& comp = dec.components[best];
    int leave_out = -1;
    std::vector<char> in_comp(g.order(), 0);
    for (int v : comp) in_comp[v] = 1;
    for (int v : comp)
      if (mates[v] < 0 || !in_comp[mates[v]]) leave_out = v;
    for (int v : comp)
      if (v != leave_out) keep.push_back(v);
  }
  out.json["kind"] = on_c_part ? "swap_case2" : "swap_case3";
  if (keep.size() < 2 || keep.size() % 2 != 0) {
    out.json["skipped"] = "part too small";
    return out;
  }

  auto [sub, labels] = induced_subgraph(g, keep);
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) local[labels[i]] = static_cast<int>(i);
  std::vector<Edge> base_edges;
  for (int v : keep)
    if (mates[v] > v && local[mates[v]] >= 0) base_edges.push_back(make_edge(local[v], local[mates[v]]));
  Matching base = Matching::of(sub, base_edges);

  SwapFamily fam = build_swap_family(sub, base);
  out.json["family"] = swap_family_to_json(fam);

  // Stream, validate, and check that each output patches back into a
  // maximum matching of g.
  std::vector<Edge> rest;
  std::vector<char> kept_flag(g.order(), 0);
  for (int v : keep) kept_flag[v] = 1;
  for (int v = 0; v < g.order(); ++v)
    if (mates[v] > v && !(kept_flag[v] && kept_flag[mates[v]])) rest.push_back(make_edge(v, mates[v]));

  int nu = matching_number(g);
  bool all_extend = true;
  std::vector<Matching> seen;
  EmitOutcome emitted = emit_swap_matchings(
      fam,
      [&](const Matching& pm) {
        std::vector<Edge> full = rest;
        for (const auto& [u, v] : pm.edges) full.push_back(make_edge(labels[u], labels[v]));
        Matching extended = Matching::of(g, full);
        MatchingValidation check = validate_matching(g, extended, MatchMode::any);
        if (!check.is_matching || extended.size() != nu) all_extend = false;
        seen.push_back(pm);
        return true;
      },
      cap);
  bool distinct = true;
  std::sort(seen.begin(), seen.end(),
            [](const Matching& l, const Matching& r) { return l.edges < r.edges; });
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].edges == seen[i - 1].edges) distinct = false;

  out.json["emitted"] = count_to_string(emitted.emitted);
  out.json["exhausted"] = emitted.exhausted;
  out.json["all_extend_to_maximum"] = all_extend;
  out.json["distinct"] = distinct;
  out.ok = all_extend && distinct;
  return out;
}

Json record_for_sample(const ExperimentConfig& cfg, std::size_t cell_index,
                       std::size_t sample_index, bool* ok_out) {
  const GridCell& cell = cfg.grid[cell_index];
  Json record;
  record["cell"] = Json{{"n", cell.n}, {"s", cell.s}, {"delta", cell.delta}};
  record["sample"] = sample_index;
  std::uint64_t seed = sample_seed(cfg.seed, cell_index, sample_index);
  record["sample_seed"] = std::to_string(seed);
  bool ok = true;

  try {
    SampledInstance inst =
        sample_near_extremal(cell.n, cell.s, cell.delta, seed, cfg.retry_budget,
                             cfg.trace_removals, cfg.limits.brute_max_order);
    record["family"] = inst.family;
    record["degenerate_family"] = inst.degenerate;
    record["graph"] = Json{{"n", inst.graph.order()}, {"m", inst.graph.size()}};

    // At 2s = n the formula value is not attainable; the densest graph with
    // matching number s is then K_n itself.
    long long eg = eg_max_size(cell.n, cell.s);
    long long attainable = eg_bound_attainable(cell.n, cell.s) ? eg : choose2(cell.n);
    bool size_ok = inst.graph.size() >= attainable - cell.delta;
    bool nu_ok = matching_number(inst.graph) == cell.s;
    record["sample_postcondition"] = size_ok && nu_ok;
    ok = ok && size_ok && nu_ok;

    Decomposition dec = decompose(inst.graph);
    record["decomposition"] = decomposition_to_json(dec);
    VerificationReport verification = verify_decomposition(inst.graph, dec);
    record["decomposition_verified"] = verification.all_pass();
    ok = ok && verification.all_pass();
    if (!verification.all_pass()) record["decomposition_checks"] = verification_to_json(verification);

    BoundReport bounds = compute_bound_report(inst.graph, dec);
    record["bound_report"] = bound_report_to_json(bounds);
    bool chain_ok = bounds.m <= bounds.m_closure && bounds.m_closure <= bounds.m_star &&
                    bounds.m_star <= bounds.m_eg;
    record["deficiency_chain_ok"] = chain_ok;
    ok = ok && chain_ok;

    // Counting, by the configured method; both routes recorded when feasible.
    std::optional<BigCount> brute, factored;
    if (inst.graph.order() <= cfg.limits.brute_max_order &&
        (cfg.counting_method != CountingMethod::decomposed))
      brute = count_maximum_matchings_bruteforce(inst.graph);
    if (cfg.counting_method != CountingMethod::brute)
      factored = count_maximum_matchings_decomposed(inst.graph, dec, cfg.limits);

    Json counts;
    std::optional<BigCount> value;
    std::string method = "too_large";
    if (cfg.counting_method == CountingMethod::brute && brute) {
      value = brute;
      method = "brute";
    } else if (cfg.counting_method == CountingMethod::decomposed && factored) {
      value = factored;
      method = "decomposed";
    } else if (cfg.counting_method == CountingMethod::auto_select) {
      if (factored) {
        value = factored;
        method = "decomposed";
      } else if (brute) {
        value = brute;
        method = "brute";
      }
    }
    counts["method"] = method;
    counts["value"] = value ? Json(count_to_string(*value)) : Json(nullptr);
    counts["brute"] = brute ? Json(count_to_string(*brute)) : Json(nullptr);
    counts["decomposed"] = factored ? Json(count_to_string(*factored)) : Json(nullptr);
    bool methods_agree = !(brute && factored) || *brute == *factored;
    counts["methods_agree"] = methods_agree;
    ok = ok && methods_agree;
    record["counts"] = counts;

    BigCount closed = family_closed_form(cell.n, cell.s, inst.family);
    record["closed_form"] = count_to_string(closed);
    if (value) {
      record["count_le_closed_form"] = *value <= closed;
      record["count_positive"] = *value >= 1;
      ok = ok && *value <= closed && *value >= 1;
    }

    // Removal audit: each accepted removal loses exactly the matchings
    // through the removed edge.
    if (!inst.trace.empty() && cfg.trace_removals &&
        inst.graph.order() <= cfg.limits.brute_max_order) {
      Json trace = Json::array();
      bool consistent = true;
      BigCount expected = closed;
      for (const auto& step : inst.trace) {
        Json item;
        item["edge"] = Json::array({step.removed.first, step.removed.second});
        item["before"] = count_to_string(step.count_before);
        item["through"] = count_to_string(step.through_edge);
        item["after"] = count_to_string(step.count_after);
        trace.push_back(item);
        if (step.count_before != expected) consistent = false;
        if (step.count_after != step.count_before - step.through_edge) consistent = false;
        expected = step.count_after;
      }
      if (value && expected != *value) consistent = false;
      record["removal_trace"] = trace;
      record["trace_consistent"] = consistent;
      ok = ok && consistent;
    }

    // Constructive engines, selected by the case label.
    ConstructiveSummary summary;
    std::vector<int> mates = maximum_matching_mates(inst.graph);
    switch (bounds.case_label) {
      case CaseLabel::case1:
        summary = run_case1(inst.graph, dec, mates, cfg.max_witnesses);
        break;
      case CaseLabel::case2:
        summary = run_swap_case(inst.graph, dec, mates, true, cfg.family_cap);
        break;
      case CaseLabel::case3:
        summary = run_swap_case(inst.graph, dec, mates, false, cfg.family_cap);
        break;
      case CaseLabel::none:
        break;
    }
    if (bounds.case_label != CaseLabel::none) {
      record["constructive"] = summary.json;
      ok = ok && summary.ok;
    } else {
      record["constructive"] = nullptr;
    }
    record["errors"] = Json::array();
  } catch (const std::exception& err) {
    record["errors"] = Json::array({err.what()});
    ok = false;
  }
  record["ok"] = ok;
  if (ok_out != nullptr) *ok_out = ok;
  return record;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  ExperimentResult result;
  std::size_t total = cfg.grid.size() * static_cast<std::size_t>(cfg.samples_per_cell);
  result.records.resize(total);
  std::vector<char> ok_flags(total, 1);

  int workers = 1;
  if (const char* env = std::getenv("MATCHKIT_WORKERS")) workers = std::max(1, std::atoi(env));
  workers = std::min<int>(workers, std::max<std::size_t>(total, 1));

  // Aggregation is by flat sample index, so scheduling cannot affect the
  // output bytes.
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t index = next.fetch_add(1);
      if (index >= total) break;
      std::size_t cell = index / cfg.samples_per_cell;
      std::size_t sample = index % cfg.samples_per_cell;
      bool ok = true;
      result.records[index] = record_for_sample(cfg, cell, sample, &ok);
      ok_flags[index] = ok ? 1 : 0;
    }
  };
  if (workers <= 1 || total <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::size_t failures = 0;
  Json case_histogram = Json{{"none", 0}, {"case1", 0}, {"case2", 0}, {"case3", 0}};
  for (std::size_t i = 0; i < total; ++i) {
    if (!ok_flags[i]) ++failures;
    const Json& record = result.records[i];
    if (record.contains("bound_report"))
      case_histogram[record["bound_report"]["case"].get<std::string>()] =
          case_histogram[record["bound_report"]["case"].get<std::string>()].get<int>() + 1;
  }
  result.all_ok = failures == 0;

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  result.summary = Json{{"records", total},
                        {"failures", failures},
                        {"cases", case_histogram},
                        {"wall_time_ms", elapsed}};
  return result;
}

std::string records_to_jsonl(const std::vector<Json>& records) {
  std::ostringstream out;
  for (const auto& record : records) out << record.dump() << '\n';
  return out.str();
}

}  // namespace matchkit
