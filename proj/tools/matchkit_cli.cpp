#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "matchkit/bounds.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/harness.hpp"
#include "matchkit/serialize.hpp"
#include "matchkit/verify_suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

matchkit::Graph load_graph(const std::string& path) {
  return matchkit::read_edge_list_file(path);
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

int run_generate(const std::string& kind, int n, int s, int b, const std::string& out_path) {
  matchkit::Graph g;
  if (kind == "complete") g = matchkit::complete_graph(n);
  else if (kind == "empty") g = matchkit::empty_graph(n);
  else if (kind == "complete-bipartite") g = matchkit::complete_bipartite(n, b);
  else if (kind == "extremal-i") g = matchkit::extremal_i(n, s);
  else if (kind == "extremal-ii") g = matchkit::extremal_ii(n, s);
  else throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
  std::string text = matchkit::serialize_edge_list(g);
  if (out_path.empty()) std::cout << text;
  else write_text(out_path, text);
  return kExitOk;
}

int run_decompose(const std::string& in_path, const std::string& json_path, bool verify) {
  matchkit::Graph g = load_graph(in_path);
  matchkit::Decomposition dec = matchkit::decompose(g);
  matchkit::Json out = matchkit::decomposition_to_json(dec);
  if (verify) {
    matchkit::VerificationReport report = matchkit::verify_decomposition(g, dec);
    out["verification"] = matchkit::verification_to_json(report);
    if (!report.all_pass()) {
      std::cout << out.dump(2) << '\n';
      return kExitVerificationFailed;
    }
  }
  if (json_path.empty()) std::cout << out.dump(2) << '\n';
  else write_text(json_path, out.dump(2) + "\n");
  return kExitOk;
}

int run_count(const std::string& in_path, const std::string& method,
              const matchkit::FeasibilityLimits& limits) {
  matchkit::Graph g = load_graph(in_path);
  std::optional<matchkit::BigCount> value;
  std::string used = method;
  if (method == "brute") {
    if (g.order() <= limits.brute_max_order)
      value = matchkit::count_maximum_matchings_bruteforce(g);
  } else if (method == "decomposed") {
    value = matchkit::count_maximum_matchings_decomposed(g, limits);
  } else if (method == "auto") {
    value = matchkit::count_maximum_matchings_decomposed(g, limits);
    used = "decomposed";
    if (!value && g.order() <= limits.brute_max_order) {
      value = matchkit::count_maximum_matchings_bruteforce(g);
      used = "brute";
    }
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
  }
  if (!value) {
    std::cout << "too large\n";
    return kExitVerificationFailed;
  }
  std::cout << matchkit::count_to_string(*value) << " (" << used << ")\n";
  return kExitOk;
}

int run_bound(const std::string& in_path) {
  matchkit::Graph g = load_graph(in_path);
  matchkit::Decomposition dec = matchkit::decompose(g);
  matchkit::BoundReport report = matchkit::compute_bound_report(g, dec);
  std::cout << matchkit::bound_report_to_json(report).dump(2) << '\n';
  return kExitOk;
}

int run_verify(const std::vector<std::string>& suites, std::uint64_t seed, bool full) {
  std::vector<matchkit::SuiteResult> results = matchkit::run_suites(suites, seed, full);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)";
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << '\n';
    all = all && r.pass;
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_path,
                       bool print_summary, int max_witnesses) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open " + config_path);
  matchkit::Json raw = matchkit::Json::parse(in);
  matchkit::ExperimentConfig cfg = matchkit::config_from_json(raw);
  if (max_witnesses >= 0) cfg.max_witnesses = static_cast<std::size_t>(max_witnesses);
  matchkit::ExperimentResult result = matchkit::run_experiment(cfg);
  std::string jsonl = matchkit::records_to_jsonl(result.records);
  if (out_path.empty()) std::cout << jsonl;
  else write_text(out_path, jsonl);
  if (print_summary) std::cerr << result.summary.dump(2) << '\n';
  return result.all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph matching toolkit: extremal families, decompositions, exact counts"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a generated graph as an edge list");
  std::string kind, gen_out;
  int gen_n = 0, gen_s = 0, gen_b = 0;
  generate->add_option("--kind", kind, "complete|empty|complete-bipartite|extremal-i|extremal-ii")
      ->required();
  generate->add_option("--n", gen_n, "order (left side size for complete-bipartite)")->required();
  generate->add_option("--s", gen_s, "matching number parameter for extremal kinds");
  generate->add_option("--b", gen_b, "right side size for complete-bipartite");
  generate->add_option("--out", gen_out, "output path (stdout when omitted)");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Gallai-Edmonds decomposition as JSON");
  std::string dec_in, dec_json;
  bool dec_verify = false;
  decompose_cmd->add_option("--in", dec_in, "edge-list file")->required();
  decompose_cmd->add_option("--json", dec_json, "output path (stdout when omitted)");
  decompose_cmd->add_flag("--verify", dec_verify, "also verify every axiom");

  // count
  auto* count_cmd = app.add_subcommand("count", "count maximum matchings exactly");
  std::string count_in, count_method = "auto";
  matchkit::FeasibilityLimits limits;
  count_cmd->add_option("--in", count_in, "edge-list file")->required();
  count_cmd->add_option("--method", count_method, "brute|decomposed|auto");
  count_cmd->add_option("--max-a", limits.max_a, "feasibility cap on |A|");
  count_cmd->add_option("--max-component", limits.max_component_order,
                        "feasibility cap on component order");
  count_cmd->add_option("--max-brute", limits.brute_max_order, "feasibility cap on brute order");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "deficiency/bound report as JSON");
  std::string bound_in;
  bound_cmd->add_option("--in", bound_in, "edge-list file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  std::vector<std::string> suites{"all"};
  std::uint64_t verify_seed = 7;
  bool verify_full = false;
  verify_cmd->add_option("--suite", suites, "suite names, or 'all'");
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_flag("--full", verify_full, "acceptance-scale runs");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a configured experiment grid");
  std::string exp_config, exp_out;
  bool exp_summary = false;
  int exp_witnesses = -1;
  exp_cmd->add_option("--config", exp_config, "JSON config file")->required();
  exp_cmd->add_option("--out", exp_out, "JSONL output path (stdout when omitted)");
  exp_cmd->add_flag("--summary", exp_summary, "print run summary to stderr");
  exp_cmd->add_option("--max-witnesses", exp_witnesses,
                      "cap on materialized witness matchings (overrides config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or error text
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(kind, gen_n, gen_s, gen_b, gen_out);
    if (decompose_cmd->parsed()) return run_decompose(dec_in, dec_json, dec_verify);
    if (count_cmd->parsed()) return run_count(count_in, count_method, limits);
    if (bound_cmd->parsed()) return run_bound(bound_in);
    if (verify_cmd->parsed()) return run_verify(suites, verify_seed, verify_full);
    if (exp_cmd->parsed()) return run_experiment_cmd(exp_config, exp_out, exp_summary, exp_witnesses);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
