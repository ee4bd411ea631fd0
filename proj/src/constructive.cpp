#include "matchkit/constructive.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchkit/counting.hpp"

namespace matchkit {

namespace {

bool all_pass(const std::vector<HypothesisCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const HypothesisCheck& c) { return c.pass; });
}

}  // namespace

bool ExtractionReport::hypotheses_pass() const { return all_pass(hypothesis_checks); }
bool SwapFamily::hypotheses_pass() const { return all_pass(hypothesis_checks); }

ExtractionReport extract_bipartite_family(const Graph& h, const std::vector<int>& side_a,
                                          std::size_t witness_cap) {
  return extract_bipartite_family(h, side_a, ExtractionMode::fixed, Rational(0), Rational(0),
                                  witness_cap);
}

ExtractionReport extract_bipartite_family(const Graph& h, const std::vector<int>& side_a,
                                          ExtractionMode mode, const Rational& eps,
                                          const Rational& gamma, std::size_t witness_cap) {
  ExtractionReport report;
  report.mode = mode;

  std::vector<char> in_a(h.order(), 0);
  for (int v : side_a) {
    if (v < 0 || v >= h.order())
      throw std::invalid_argument("extract_bipartite_family: side vertex out of range");
    in_a[v] = 1;
  }
  for (const auto& [u, v] : h.edges())
    if (in_a[u] == in_a[v])
      throw std::invalid_argument("extract_bipartite_family: edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} does not cross the sides");
  long long a = static_cast<long long>(side_a.size());
  long long k = h.order() - a;
  long long missing = a * k - h.size();

  if (matching_number(h) != a)
    throw std::invalid_argument("extract_bipartite_family: no matching saturates the A side");
  report.base_matching = maximum_matching(h);

  auto check = [&](std::string name, bool pass, std::string detail = "") {
    report.hypothesis_checks.push_back({std::move(name), pass, std::move(detail)});
  };
  if (mode == ExtractionMode::fixed) {
    check("k > 1.1a", 10 * k > 11 * a,
          "k=" + std::to_string(k) + " a=" + std::to_string(a));
    check("missing <= 0.08a^2", 25 * missing <= 2 * a * a,
          "missing=" + std::to_string(missing));
  } else {
    if (!(eps > 0 && eps < 1) || !(gamma > 0 && gamma < 1))
      throw std::invalid_argument("extract_bipartite_family: eps, gamma must lie in (0,1)");
    check("eps*k/2 >= a", eps * Rational(k) >= 2 * Rational(a));
    check("missing <= gamma*a*k", Rational(missing) <= gamma * Rational(a) * Rational(k));
  }

  // Free side of the base matching.
  std::vector<char> saturated(h.order(), 0);
  for (const auto& [u, v] : report.base_matching.edges) saturated[u] = saturated[v] = 1;

  // Candidate selection. Fixed mode thresholds on the free degree, the
  // parameterized variant on the plain degree; both compare exactly.
  struct Candidate {
    int vertex;
    long long free_degree;
  };
  std::vector<Candidate> candidates;
  for (int u : side_a) {
    long long free_degree = 0;
    for (int w : h.neighbors(u))
      if (!saturated[w]) ++free_degree;
    bool qualifies;
    if (mode == ExtractionMode::fixed) {
      qualifies = 10 * free_degree >= 10 * k - 11 * a;
    } else {
      long long gap = k - h.degree(u);
      qualifies = Rational(gap) * Rational(gap) <= gamma * Rational(k) * Rational(k);
    }
    if (qualifies) candidates.push_back({u, free_degree});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
    if (l.free_degree != r.free_degree) return l.free_degree > r.free_degree;
    return l.vertex < r.vertex;
  });
  for (const auto& c : candidates) report.a_prime.push_back(c.vertex);

  // Promised count and the number of vertices to reassign.
  long long reach = 0, exponent = 0;
  if (mode == ExtractionMode::fixed) {
    reach = (10 * k - 11 * a + 9) / 10 > 0 ? (10 * k - 11 * a + 9) / 10 : 0;  // ceil(k-1.1a)
    exponent = std::min((a + 4) / 5, reach);                                  // min(ceil(0.2a), reach)
  } else {
    Rational shrink = 1 - eps / 2;
    reach = std::max<long long>(0, ceil_minus_sqrt(shrink * Rational(k), gamma * Rational(k * k)));
    exponent = std::max<long long>(0, ceil_minus_sqrt(shrink * Rational(a), gamma * Rational(a * a)));
  }
  report.target_bound = exponent > reach ? BigCount(0) : falling_factorial(reach, exponent);

  if (mode == ExtractionMode::fixed) {
    // Counting argument from the size bound: a shortage of candidates
    // forces the graph below ak - 0.08a^2 edges. A violation here would
    // mean the selection itself is wrong.
    bool shortage = 5 * static_cast<long long>(candidates.size()) < a;
    if (shortage && !(25 * h.size() < 25 * a * k - 2 * a * a))
      throw std::logic_error("extract_bipartite_family: candidate shortage contradicts size bound");
    check("candidate set covers 0.2a", !shortage,
          "candidates=" + std::to_string(candidates.size()));
  }

  std::size_t rematch_count = static_cast<std::size_t>(
      std::min<long long>(exponent, static_cast<long long>(report.a_prime.size())));
  report.rematched.assign(report.a_prime.begin(), report.a_prime.begin() + rematch_count);

  // The family: injective reassignments of the rematched vertices into the
  // free side, completed by base-matching edges on the rest of A.
  std::vector<int> free_side;
  for (int v = 0; v < h.order(); ++v)
    if (!in_a[v] && !saturated[v]) free_side.push_back(v);

  {
    std::vector<int> keep = report.rematched;
    keep.insert(keep.end(), free_side.begin(), free_side.end());
    auto [sub, labels] = induced_subgraph(h, keep);
    std::vector<int> sub_a;
    for (int i = 0; i < sub.order(); ++i) {
      auto pos = std::find(report.rematched.begin(), report.rematched.end(), labels[i]);
      if (pos != report.rematched.end()) sub_a.push_back(i);
    }
    if (matching_number(sub) == static_cast<int>(sub_a.size()))
      report.emitted = count_saturating_bipartite(sub, sub_a);
    else
      report.emitted = 0;
  }

  // Materialize a few witnesses.
  if (witness_cap > 0 && report.emitted > 0) {
    std::vector<Edge> kept_base;
    std::vector<char> rematched_flag(h.order(), 0);
    for (int u : report.rematched) rematched_flag[u] = 1;
    for (const auto& [u, v] : report.base_matching.edges)
      if (!rematched_flag[u] && !rematched_flag[v]) kept_base.push_back({u, v});

    std::vector<char> taken(h.order(), 0);
    std::vector<Edge> assignment;
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
      if (report.witnesses.size() >= witness_cap) return;
      if (idx == report.rematched.size()) {
        std::vector<Edge> full = kept_base;
        full.insert(full.end(), assignment.begin(), assignment.end());
        report.witnesses.push_back(Matching::of(h, full));
        return;
      }
      int u = report.rematched[idx];
      for (int w : h.neighbors(u)) {
        if (saturated[w] || taken[w]) continue;
        taken[w] = 1;
        assignment.push_back(make_edge(u, w));
        assign(idx + 1);
        assignment.pop_back();
        taken[w] = 0;
        if (report.witnesses.size() >= witness_cap) return;
      }
    };
    assign(0);
  }

  return report;
}

SwapFamily build_swap_family(const Graph& k_graph, const Matching& m) {
  MatchingValidation check = validate_matching(k_graph, m, MatchMode::perfect);
  if (!check.is_matching || !check.meets_mode)
    throw std::invalid_argument("build_swap_family: base is not a perfect matching (" +
                                check.note + ")");
  SwapFamily fam;
  fam.host = k_graph;
  fam.base = m;
  fam.pairs.assign(m.edges.begin(), m.edges.end());
  long long p = static_cast<long long>(fam.pairs.size());

  std::vector<Edge> swap_edges;
  for (long long i = 0; i < p; ++i) {
    for (long long j = i + 1; j < p; ++j) {
      const auto& [xi, yi] = fam.pairs[i];
      const auto& [xj, yj] = fam.pairs[j];
      if (k_graph.has_edge(xi, yj) && k_graph.has_edge(xj, yi))
        swap_edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  fam.swap_graph = Graph(static_cast<int>(p), swap_edges);

  for (int v = 0; v < fam.swap_graph.order(); ++v)
    if (200LL * fam.swap_graph.degree(v) >= 179 * p) ++fam.high_degree_count;

  // Peel to the subgraph where every vertex keeps degree >= 0.895p, then
  // take the highest-degree survivors as X and verify the lemma's
  // outside-neighbor requirement directly.
  std::vector<char> alive(fam.swap_graph.order(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(fam.swap_graph.order(), 0);
    for (int v = 0; v < fam.swap_graph.order(); ++v) {
      if (!alive[v]) continue;
      for (int w : fam.swap_graph.neighbors(v))
        if (alive[w]) ++degree[v];
    }
    for (int v = 0; v < fam.swap_graph.order(); ++v) {
      if (alive[v] && 200LL * degree[v] < 179 * p) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  long long want = (447 * p + 999) / 1000;  // ceil(0.447p)
  {
    std::vector<std::pair<int, int>> survivors;  // (degree within survivors, vertex)
    for (int v = 0; v < fam.swap_graph.order(); ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (int w : fam.swap_graph.neighbors(v))
        if (alive[w]) ++deg;
      survivors.push_back({deg, v});
    }
    std::stable_sort(survivors.begin(), survivors.end(), [](const auto& l, const auto& r) {
      if (l.first != r.first) return l.first > r.first;
      return l.second < r.second;
    });
    for (const auto& [deg, v] : survivors) {
      if (static_cast<long long>(fam.x_set.size()) >= want) break;
      fam.x_set.push_back(v);
    }
    std::sort(fam.x_set.begin(), fam.x_set.end());
  }
  {
    std::vector<char> in_x(fam.swap_graph.order(), 0);
    for (int v : fam.x_set) in_x[v] = 1;
    bool ok = static_cast<long long>(fam.x_set.size()) >= want;
    for (int v : fam.x_set) {
      long long outside = 0;
      for (int w : fam.swap_graph.neighbors(v))
        if (!in_x[w]) ++outside;
      if (1000 * outside < 447 * p) ok = false;
    }
    fam.x_condition_verified = ok;
  }

  fam.target_bound = big_factorial(want);

  long long missing = choose2(2 * p) - k_graph.size();
  fam.hypothesis_checks.push_back(
      {"p >= 1000", p >= 1000, "p=" + std::to_string(p)});
  fam.hypothesis_checks.push_back({"removed <= 0.01 C(p,2)", 100 * missing <= choose2(p),
                                   "removed=" + std::to_string(missing)});
  fam.hypothesis_checks.push_back(
      {"X selection verified", fam.x_condition_verified,
       "|X|=" + std::to_string(fam.x_set.size()) + " of " + std::to_string(want)});
  return fam;
}

EmitOutcome emit_swap_matchings(const SwapFamily& fam,
                                const std::function<bool(const Matching&)>& sink,
                                std::optional<unsigned long long> cap) {
  EmitOutcome out;
  if (cap && *cap == 0) return out;
  const auto& swap_edges = fam.swap_graph.edges();
  std::size_t p = fam.pairs.size();
  std::vector<int> partner(p);
  for (std::size_t i = 0; i < p; ++i) partner[i] = static_cast<int>(i);

  unsigned long long emitted = 0;
  bool stopped = false;

  auto emit_current = [&]() {
    std::vector<Edge> edges;
    edges.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      std::size_t j = static_cast<std::size_t>(partner[i]);
      if (j == i) {
        edges.push_back(fam.pairs[i]);
      } else if (j > i) {
        edges.push_back(make_edge(fam.pairs[i].first, fam.pairs[j].second));
        edges.push_back(make_edge(fam.pairs[j].first, fam.pairs[i].second));
      }
    }
    Matching result = Matching::of(fam.host, edges);
    MatchingValidation v = validate_matching(fam.host, result, MatchMode::perfect);
    if (!v.is_matching || !v.meets_mode)
      throw std::logic_error("emit_swap_matchings: produced an invalid matching");
    ++emitted;
    if (!sink(result)) stopped = true;
    if (cap && emitted >= *cap) stopped = true;
  };

  // Pre-order walk: emit the current swap set, then extend it with edges of
  // larger index, which yields the empty set first and lexicographic order
  // after that.
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    if (stopped) return;
    emit_current();
    for (std::size_t e = from; e < swap_edges.size() && !stopped; ++e) {
      auto [i, j] = swap_edges[e];
      if (partner[i] != i || partner[j] != j) continue;
      partner[i] = j;
      partner[j] = i;
      walk(e + 1);
      partner[i] = i;
      partner[j] = j;
    }
  };
  walk(0);

  out.emitted = emitted;
  out.exhausted = !stopped;
  return out;
}

}  // namespace matchkit
