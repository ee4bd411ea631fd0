#include "matchkit/serialize.hpp"

#include <stdexcept>

namespace matchkit {

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = numerator(r).convert_to<long long>();
  j["den"] = denominator(r).convert_to<long long>();
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + text + "' (use p or p/q)");
  }
}

std::string count_to_string(const BigCount& c) { return c.str(); }

Json matching_to_json(const Matching& m) {
  Json pairs = Json::array();
  for (const auto& [u, v] : m.edges) pairs.push_back(Json::array({u, v}));
  return pairs;
}

Json decomposition_to_json(const Decomposition& dec) {
  Json j;
  j["D"] = dec.D;
  j["A"] = dec.A;
  j["C"] = dec.C;
  j["components"] = dec.components;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition dec;
  dec.D = j.at("D").get<std::vector<int>>();
  dec.A = j.at("A").get<std::vector<int>>();
  dec.C = j.at("C").get<std::vector<int>>();
  dec.components = j.at("components").get<std::vector<std::vector<int>>>();
  return dec;
}

Json verification_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  Json j;
  j["pass"] = report.all_pass();
  j["checks"] = checks;
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["m"] = r.m;
  j["m_eg"] = r.m_eg;
  j["eg_attainable"] = r.eg_attainable;
  j["m_star"] = r.m_star;
  j["m_closure"] = r.m_closure;
  j["deficiency"] = r.deficiency;
  j["a"] = r.a;
  j["c"] = r.c;
  j["d"] = r.d;
  j["k"] = r.k;
  j["x"] = rational_to_json(r.x);
  j["y"] = rational_to_json(r.y);
  j["delta"] = rational_to_json(r.delta);
  j["g"] = rational_to_json(r.g);
  j["branch"] = r.branch == EgBranch::split ? "split" : "clique";
  j["case"] = to_string(r.case_label);
  j["theorem1_scale_ok"] = r.theorem1_scale_ok;
  j["theorem1_deficiency_tolerance"] = r.theorem1_deficiency_tolerance;
  j["theorem1_applicable"] = r.theorem1_applicable;
  j["theorem1_count_bound"] = count_to_string(r.theorem1_count_bound);
  return j;
}

namespace {

Json hypothesis_checks_json(const std::vector<HypothesisCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(item);
  }
  return out;
}

}  // namespace

Json extraction_to_json(const ExtractionReport& r) {
  Json j;
  j["mode"] = r.mode == ExtractionMode::fixed ? "fixed" : "parameterized";
  j["target_bound"] = count_to_string(r.target_bound);
  j["emitted"] = count_to_string(r.emitted);
  j["a_prime"] = r.a_prime;
  j["rematched"] = r.rematched;
  j["base_matching"] = matching_to_json(r.base_matching);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(matching_to_json(w));
  j["witnesses"] = witnesses;
  j["hypothesis_checks"] = hypothesis_checks_json(r.hypothesis_checks);
  j["hypotheses_pass"] = r.hypotheses_pass();
  return j;
}

Json swap_family_to_json(const SwapFamily& fam) {
  Json j;
  j["p"] = static_cast<long long>(fam.pairs.size());
  j["base_matching"] = matching_to_json(fam.base);
  j["swap_graph_size"] = fam.swap_graph.size();
  j["x_set"] = fam.x_set;
  j["high_degree_count"] = fam.high_degree_count;
  j["x_condition_verified"] = fam.x_condition_verified;
  j["target_bound"] = count_to_string(fam.target_bound);
  j["hypothesis_checks"] = hypothesis_checks_json(fam.hypothesis_checks);
  j["hypotheses_pass"] = fam.hypotheses_pass();
  return j;
}

}  // namespace matchkit
