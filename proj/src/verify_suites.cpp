#include "matchkit/verify_suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "matchkit/bounds.hpp"
#include "matchkit/constructive.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/harness.hpp"
#include "matchkit/reference.hpp"

namespace matchkit {

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int permille) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bounded_random(rng, 1000) < static_cast<std::uint64_t>(permille))
        edges.push_back({u, v});
  return Graph(n, edges);
}

// Saturating-matching count by literal enumeration: match the A vertices
// one by one to unused neighbors. Independent of the DP in the library.
long long enumerate_saturating(const Graph& h, const std::vector<int>& side_a) {
  std::vector<char> taken(h.order(), 0);
  std::function<long long(std::size_t)> go = [&](std::size_t idx) -> long long {
    if (idx == side_a.size()) return 1;
    long long total = 0;
    for (int w : h.neighbors(side_a[idx])) {
      if (taken[w]) continue;
      taken[w] = 1;
      total += go(idx + 1);
      taken[w] = 0;
    }
    return total;
  };
  return go(0);
}

// All matchings (any size), counted by edge recursion.
long long count_all_matchings(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<char> used(g.order(), 0);
  std::function<long long(std::size_t)> go = [&](std::size_t from) -> long long {
    long long total = 1;  // the current matching itself
    for (std::size_t i = from; i < edges.size(); ++i) {
      const auto& [u, v] = edges[i];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      total += go(i + 1);
      used[u] = used[v] = 0;
    }
    return total;
  };
  return go(0);
}

struct Failure {
  bool failed = false;
  std::string detail;
  void set(const std::string& message) {
    if (!failed) {
      failed = true;
      detail = message;
    }
  }
};

SuiteResult finish(const std::string& name, const Failure& failure, long long checked) {
  return SuiteResult{name, !failure.failed, checked, failure.detail};
}

std::uint64_t canonical_edge_mask(const Graph& g,
                                  const std::vector<std::vector<int>>& permutations,
                                  const std::vector<std::vector<int>>& pair_bit) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& perm : permutations) {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges()) {
      int a = perm[u], b = perm[v];
      mask |= std::uint64_t{1} << pair_bit[std::min(a, b)][std::max(a, b)];
    }
    best = std::min(best, mask);
  }
  return best;
}

}  // namespace

SuiteResult suite_graph_ops(std::uint64_t seed, int trials) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0x67a1));

  for (int t = 0; t < trials && !failure.failed; ++t) {
    int n = 1 + static_cast<int>(bounded_random(rng, 10));
    int permille = 100 + static_cast<int>(bounded_random(rng, 800));
    Graph g = random_graph(rng, n, permille);
    ++checked;
    if (complement(complement(g)) != g) failure.set("complement is not an involution");
    Graph round = parse_edge_list(serialize_edge_list(g));
    if (round != g) failure.set("edge-list round trip changed the graph");
    Graph g2 = random_graph(rng, 1 + static_cast<int>(bounded_random(rng, 6)), permille);
    if (matching_number(disjoint_union(g, g2)) != matching_number(g) + matching_number(g2))
      failure.set("matching number not additive over disjoint union");
  }

  // Extremal generators meet the size formula on their own branch and have
  // matching number exactly s.
  for (int n = 1; n <= 14 && !failure.failed; ++n) {
    for (int s = 0; 2 * s <= n; ++s) {
      ++checked;
      Graph family_i = extremal_i(n, s);
      if (5 * s <= 2 * n - 3 && family_i.size() != eg_max_size(n, s))
        failure.set("family (i) misses the extremal size at n=" + std::to_string(n) +
                    " s=" + std::to_string(s));
      if (matching_number(family_i) != s) failure.set("family (i) has wrong matching number");
      if (2 * s + 1 <= n) {
        Graph family_ii = extremal_ii(n, s);
        if (5 * s >= 2 * n - 3 && family_ii.size() != eg_max_size(n, s))
          failure.set("family (ii) misses the extremal size at n=" + std::to_string(n) +
                      " s=" + std::to_string(s));
        if (matching_number(family_ii) != s) failure.set("family (ii) has wrong matching number");
      }
    }
  }
  return finish("graph-ops", failure, checked);
}

SuiteResult suite_matching_engine(std::uint64_t seed, int graphs, int max_n) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0x1b2d));
  for (int t = 0; t < graphs && !failure.failed; ++t) {
    int n = 1 + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(max_n)));
    int permille = 50 + static_cast<int>(bounded_random(rng, 900));
    Graph g = random_graph(rng, n, permille);
    ++checked;
    int engine = matching_number(g);
    if (engine != reference_matching_number(g)) {
      failure.set("engine disagrees with subset-DP reference on n=" + std::to_string(n));
      break;
    }
    std::vector<char> alive(n, 1);
    for (int u = 0; u < n; ++u) {
      alive[u] = 0;
      int smaller = matching_number_masked(g, alive);
      alive[u] = 1;
      if (smaller != engine && smaller != engine - 1)
        failure.set("vertex deletion changed the matching number by more than one");
    }
    Matching canonical = maximum_matching(g);
    MatchingValidation valid = validate_matching(g, canonical, MatchMode::maximum);
    if (!valid.is_matching || !valid.meets_mode) failure.set("canonical matching invalid");
    auto first = list_maximum_matchings(g, 1);
    if (first.size() != 1 || !(first[0] == canonical))
      failure.set("canonical matching is not the lexicographic minimum");
  }
  return finish("matching-engine", failure, checked);
}

SuiteResult suite_extremal_closed_forms() {
  Failure failure;
  long long checked = 0;
  for (int s = 1; s <= 4 && !failure.failed; ++s) {
    for (int n = 2 * s; n <= 14; ++n) {
      ++checked;
      BigCount actual = count_maximum_matchings_bruteforce(extremal_i(n, s));
      if (actual != falling_factorial(n - s, s) || actual != extremal_count_i(n, s)) {
        failure.set("family (i) count mismatch at n=" + std::to_string(n) +
                    " s=" + std::to_string(s) + " (got " + actual.str() + ")");
        break;
      }
    }
  }
  for (int s = 1; s <= 5 && !failure.failed; ++s) {
    BigCount expected = big_factorial(2 * s + 1) / (big_factorial(s) * (BigCount(1) << s));
    for (int n = 2 * s + 1; n <= 2 * s + 2; ++n) {
      ++checked;
      BigCount actual = count_maximum_matchings_bruteforce(extremal_ii(n, s));
      if (actual != expected || actual != extremal_count_ii(n, s)) {
        failure.set("family (ii) count mismatch at s=" + std::to_string(s) + " (got " +
                    actual.str() + ", want " + expected.str() + ")");
        break;
      }
    }
  }
  return finish("extremal-closed-forms", failure, checked);
}

SuiteResult suite_eg_exhaustive(int max_n) {
  Failure failure;
  long long checked = 0;
  for (int n = 0; n <= max_n && !failure.failed; ++n) {
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> bit_to_pair(pairs);
    std::vector<std::vector<int>> pair_bit(n, std::vector<int>(n, -1));
    {
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          bit_to_pair[bit] = {u, v};
          pair_bit[u][v] = bit;
          ++bit;
        }
    }
    std::vector<std::vector<int>> permutations;
    {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      do {
        permutations.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // Canonical labeled forms of the extremal families per matching number.
    std::vector<std::vector<std::uint64_t>> attaining(n / 2 + 1);
    for (int s = 0; 2 * s <= n; ++s) {
      if (5 * s <= 2 * n - 3 || extremal_i(n, s).size() == eg_max_size(n, s))
        attaining[s].push_back(canonical_edge_mask(extremal_i(n, s), permutations, pair_bit));
      if (2 * s + 1 <= n && extremal_ii(n, s).size() == eg_max_size(n, s))
        attaining[s].push_back(canonical_edge_mask(extremal_ii(n, s), permutations, pair_bit));
    }

    std::vector<std::uint32_t> adj(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::fill(adj.begin(), adj.end(), 0);
      std::uint64_t scan = mask;
      while (scan) {
        int bit = std::countr_zero(scan);
        scan &= scan - 1;
        auto [u, v] = bit_to_pair[bit];
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
      }
      int m = std::popcount(mask);
      int nu = reference_matching_number(adj, n);
      ++checked;
      if (m > eg_max_size(n, nu)) {
        failure.set("bound violated on n=" + std::to_string(n) + " mask=" + std::to_string(mask));
        break;
      }
      if (m == eg_max_size(n, nu)) {
        std::vector<Edge> edges;
        for (int bit = 0; bit < pairs; ++bit)
          if (mask & (std::uint64_t{1} << bit)) edges.push_back(bit_to_pair[bit]);
        std::uint64_t canon = canonical_edge_mask(Graph(n, edges), permutations, pair_bit);
        const auto& expected = attaining[nu];
        if (std::find(expected.begin(), expected.end(), canon) == expected.end()) {
          failure.set("equality graph outside characterizations at n=" + std::to_string(n) +
                      " mask=" + std::to_string(mask));
          break;
        }
      }
    }
  }
  return finish("eg-exhaustive", failure, checked);
}

SuiteResult suite_oracle_equivalence(std::uint64_t seed, int graphs, int max_n) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0x03c3));
  for (int t = 0; t < graphs && !failure.failed; ++t) {
    int n = 1 + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(max_n)));
    int permille = 50 + static_cast<int>(bounded_random(rng, 900));
    Graph g = random_graph(rng, n, permille);
    ++checked;
    Decomposition fast = decompose(g);
    Decomposition literal = decompose_by_definition(g);
    if (!(fast == literal)) {
      failure.set("decompositions disagree on a graph with n=" + std::to_string(n));
      break;
    }
    auto factored = count_maximum_matchings_decomposed(g, fast);
    BigCount brute = count_maximum_matchings_bruteforce(g);
    if (!factored || *factored != brute) {
      failure.set("counts disagree on a graph with n=" + std::to_string(n) + " (brute " +
                  brute.str() + ")");
      break;
    }
  }
  return finish("oracle-equivalence", failure, checked);
}

SuiteResult suite_lemma1_identity(std::uint64_t seed, long long tuples) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0x11d7));
  while (checked < tuples && !failure.failed) {
    long long n = 2 + static_cast<long long>(bounded_random(rng, 79));
    long long s = bounded_random(rng, static_cast<std::uint64_t>(n / 2 + 1));
    long long a = bounded_random(rng, static_cast<std::uint64_t>(s + 1));
    long long k = n - 2 * s + a;
    long long slack = n - a - k;
    if (slack < 0) continue;
    long long d = k + static_cast<long long>(bounded_random(rng, static_cast<std::uint64_t>(slack + 1)));
    ++checked;
    if (!verify_lemma1_identity(n, s, a, d))
      failure.set("identity failed at n=" + std::to_string(n) + " s=" + std::to_string(s) +
                  " a=" + std::to_string(a) + " d=" + std::to_string(d));
  }
  return finish("lemma1-identity", failure, checked);
}

SuiteResult suite_delta_lemma(long long min_points) {
  Failure failure;
  long long satisfying = 0;
  const int steps = 24;
  for (long long n : {25LL, 60LL, 1000LL}) {
    Rational branch_split_limit = Rational(2, 5) - Rational(3, 5 * n);
    std::vector<Rational> deltas = {Rational(3, n), Rational(5, n), Rational(1, 10),
                                    Rational(1, 25)};
    for (const Rational& delta : deltas) {
      if (delta < Rational(3, n)) continue;
      for (int t = 1; t <= 60; ++t) {
        Rational nu(t, 120);
        EgBranch branch = nu <= branch_split_limit ? EgBranch::split : EgBranch::clique;
        for (int u = 0; u <= steps; ++u) {
          Rational x = nu * Rational(u, steps);
          for (int v = 0; v <= steps; ++v) {
            Rational y = 2 * x * Rational(v, steps);
            if (!condition_e3_holds(x, y, nu, delta)) continue;
            ++satisfying;
            Rational g = g_value(x, y, nu, branch);
            if (g < delta * delta) {
              failure.set("g < delta^2 at nu=" + std::to_string(t) + "/120, n=" +
                          std::to_string(n));
            }
          }
        }
      }
    }
  }
  if (satisfying < min_points)
    failure.set("grid produced only " + std::to_string(satisfying) + " qualifying points");
  return finish("delta-lemma", failure, satisfying);
}

SuiteResult suite_deficiency_chain(std::uint64_t seed, int graphs, int max_n) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0x5afe));

  std::vector<Graph> corpus;
  for (int t = 0; t < graphs; ++t) {
    int n = 1 + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(max_n)));
    corpus.push_back(random_graph(rng, n, 50 + static_cast<int>(bounded_random(rng, 900))));
  }
  for (int n = 2; n <= 12; ++n)
    for (int s = 0; 2 * s <= n; ++s) {
      corpus.push_back(extremal_i(n, s));
      if (2 * s + 1 <= n) corpus.push_back(extremal_ii(n, s));
    }
  for (std::uint64_t inner = 0; inner < 12; ++inner) {
    int n = 6 + static_cast<int>(bounded_random(rng, 7));
    int s = 1 + static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(n / 2)));
    try {
      corpus.push_back(sample_near_extremal(n, s, static_cast<long long>(bounded_random(rng, 4)),
                                            rng())
                           .graph);
    } catch (const std::exception&) {
      // tiny cells can run out of removable edges; that path is tested elsewhere
    }
  }

  for (const Graph& g : corpus) {
    if (failure.failed) break;
    if (g.order() < 1) continue;
    ++checked;
    Decomposition dec = decompose(g);
    BoundReport report = compute_bound_report(g, dec);
    if (!(report.m <= report.m_closure && report.m_closure <= report.m_star &&
          report.m_star <= report.m_eg)) {
      failure.set("chain m <= m(G*) <= m* <= m_eg violated (n=" + std::to_string(report.n) + ")");
      break;
    }
    Rational lhs(report.m_eg - report.m_star);
    Rational rhs = report.g * report.n * report.n - report.n;
    if (lhs < rhs) {
      failure.set("m_eg - m* >= g n^2 - n violated (n=" + std::to_string(report.n) + ")");
      break;
    }
    Graph star = closure(g, dec);
    if (star.size() != report.m_closure) failure.set("closure size differs from the formula");
    if (matching_number(star) != report.s) failure.set("closure changed the matching number");
    if (!(decompose(star) == dec)) failure.set("closure changed the decomposition");
    for (const auto& comp : dec.components)
      if (comp.size() % 2 == 0) failure.set("even-order component");
    if (g.order() - 2 * report.s != report.k - report.a) failure.set("unsaturated-count identity");
  }
  return finish("deficiency-chain", failure, checked);
}

SuiteResult suite_bipartite_extractor(std::uint64_t seed, int per_shape) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0xb1b4));
  for (int a = 1; a <= 5 && !failure.failed; ++a) {
    int k_low = (11 * a) / 10 + 1;
    for (int k = k_low; k <= 20 && !failure.failed; k += 3) {
      long long budget = (8 * a * a) / 100;  // floor(0.08 a^2)
      for (int t = 0; t < per_shape && !failure.failed; ++t) {
        Graph h = complete_bipartite(a, k);
        std::vector<int> side(a);
        for (int i = 0; i < a; ++i) side[i] = i;
        long long removals = budget == 0 ? 0 : static_cast<long long>(bounded_random(
                                                   rng, static_cast<std::uint64_t>(budget + 1)));
        long long done = 0;
        int attempts = 0;
        while (done < removals && attempts < 200) {
          ++attempts;
          Edge victim = h.edges()[bounded_random(rng, h.size())];
          Graph candidate = remove_edges(h, {victim});
          if (matching_number(candidate) == a) {
            h = std::move(candidate);
            ++done;
          }
        }
        ++checked;
        ExtractionReport report = extract_bipartite_family(h, side, 8);
        if (!report.hypotheses_pass()) {
          failure.set("hypotheses unexpectedly failed at a=" + std::to_string(a) +
                      " k=" + std::to_string(k));
          break;
        }
        if (report.emitted < report.target_bound) {
          failure.set("extractor under-delivered at a=" + std::to_string(a) +
                      " k=" + std::to_string(k));
          break;
        }
        long long oracle = enumerate_saturating(h, side);
        if (report.emitted > BigCount(oracle)) {
          failure.set("extractor over-counted at a=" + std::to_string(a) +
                      " k=" + std::to_string(k));
          break;
        }
        std::set<std::vector<Edge>> seen;
        for (const auto& witness : report.witnesses) {
          MatchingValidation v = validate_matching(h, witness, MatchMode::any);
          std::vector<char> hit(h.order(), 0);
          for (const auto& [p, q] : witness.edges) hit[p] = hit[q] = 1;
          bool saturates = std::all_of(side.begin(), side.end(), [&](int u) { return hit[u]; });
          if (!v.is_matching || !saturates) failure.set("invalid witness matching");
          if (!seen.insert(witness.edges).second) failure.set("duplicate witness matching");
        }
      }
    }
  }
  return finish("bipartite-extractor", failure, checked);
}

SuiteResult suite_swap_family(std::uint64_t seed, int max_p) {
  Failure failure;
  long long checked = 0;
  std::mt19937_64 rng(splitmix64(seed ^ 0x50a9));
  for (int p = 3; p <= max_p && !failure.failed; ++p) {
    Graph k_graph = complete_graph(2 * p);
    std::vector<Edge> base_edges;
    for (int i = 0; i < p; ++i) base_edges.push_back({2 * i, 2 * i + 1});
    long long budget = std::max<long long>(1, choose2(p) / 100);
    long long removals = static_cast<long long>(
        bounded_random(rng, static_cast<std::uint64_t>(budget + 1)));
    std::set<Edge> base_set(base_edges.begin(), base_edges.end());
    long long done = 0;
    while (done < removals) {
      Edge victim = k_graph.edges()[bounded_random(rng, k_graph.size())];
      if (base_set.count(victim)) continue;
      k_graph = remove_edges(k_graph, {victim});
      ++done;
    }
    ++checked;
    Matching base = Matching::of(k_graph, base_edges);
    SwapFamily fam = build_swap_family(k_graph, base);
    if (fam.swap_graph.size() < choose2(p) - done)
      failure.set("swap graph lost more edges than were removed (p=" + std::to_string(p) + ")");
    if (100 * done <= choose2(p) && 100 * fam.swap_graph.size() < 99 * choose2(p))
      failure.set("swap graph below 0.99 C(p,2) within budget (p=" + std::to_string(p) + ")");

    std::optional<unsigned long long> cap;
    if (p > 6) cap = 5000;
    std::vector<std::vector<Edge>> outputs;
    EmitOutcome emitted = emit_swap_matchings(
        fam,
        [&](const Matching& m) {
          outputs.push_back(m.edges);
          return true;
        },
        cap);
    std::sort(outputs.begin(), outputs.end());
    if (std::adjacent_find(outputs.begin(), outputs.end()) != outputs.end())
      failure.set("duplicate swap matchings (p=" + std::to_string(p) + ")");
    if (p <= 6) {
      if (!emitted.exhausted) failure.set("small family unexpectedly capped");
      long long swap_matchings = count_all_matchings(fam.swap_graph);
      if (emitted.emitted != BigCount(swap_matchings))
        failure.set("emitted count differs from matchings of the swap graph");
      auto pms = list_maximum_matchings(k_graph);  // nu = p: these are the perfect matchings
      std::set<std::vector<Edge>> pm_set;
      for (const auto& m : pms) pm_set.insert(m.edges);
      if (BigCount(static_cast<long long>(pm_set.size())) < emitted.emitted)
        failure.set("family exceeds the perfect-matching count");
      for (const auto& edges : outputs)
        if (!pm_set.count(edges)) failure.set("swap output is not a perfect matching of K");
    }
  }
  return finish("swap-family", failure, checked);
}

SuiteResult suite_theorem2(std::uint64_t seed, int trials) {
  Failure failure;
  long long checked = 0;

  // Pinned values, exact.
  if (theorem2_h_nu(Rational(1, 2)) != Rational(4, 21)) failure.set("h_nu(1/2) != 4/21");
  {
    Theorem2Params p = theorem2_thresholds(Rational(1, 2), Rational(1, 10));
    if (p.h_delta != Rational(7, 15360)) failure.set("h_delta(1/2,1/10) != 7/15360");
  }
  if (theorem2_bound(100, 10, Rational(1, 2)) != falling_factorial(50, 5))
    failure.set("theorem2 bound mismatch at (100,10,1/2)");

  std::mt19937_64 rng(splitmix64(seed ^ 0x7e02));
  for (int t = 0; t < trials && !failure.failed; ++t) {
    Rational eps(1 + static_cast<long long>(bounded_random(rng, 99)), 100);
    Rational h = theorem2_h_nu(eps);
    Rational nu = h * Rational(1 + static_cast<long long>(bounded_random(rng, 19)), 20);
    if (!(nu > 0 && nu < h)) continue;
    ++checked;
    try {
      Theorem2Params p = theorem2_thresholds(eps, nu);
      if (!(p.h_delta > 0 && p.h_delta <= eps * nu / 8)) failure.set("delta cap violated");
      Rational t_val = eps * eps / (2 * (2 - eps));
      if (!(p.gamma <= t_val * t_val)) failure.set("gamma above t^2");
      if (!(1 - (1 + eps / 2) * nu >= 1 - eps / 2)) failure.set("nu constraint violated");
    } catch (const std::exception& err) {
      failure.set(std::string("thresholds raised: ") + err.what());
    }
  }
  return finish("theorem2", failure, checked);
}

SuiteResult suite_experiment_grid(std::uint64_t seed) {
  Failure failure;
  ExperimentConfig cfg;
  cfg.seed = seed;
  for (auto [n, s] : std::vector<std::pair<int, int>>{{6, 3}, {9, 2}, {11, 3}, {12, 4}, {13, 5}, {14, 6}})
    for (long long delta = 0; delta <= 3; ++delta) cfg.grid.push_back({n, s, delta});
  cfg.samples_per_cell = 3;
  cfg.counting_method = CountingMethod::auto_select;
  cfg.trace_removals = true;

  ExperimentResult first = run_experiment(cfg);
  if (!first.all_ok) {
    for (const auto& record : first.records) {
      if (!record.at("ok").get<bool>()) {
        failure.set("record failed: " + record.dump());
        break;
      }
    }
  }
  ExperimentResult second = run_experiment(cfg);
  if (records_to_jsonl(first.records) != records_to_jsonl(second.records))
    failure.set("replay with the same seed changed the report bytes");
  return finish("experiment-grid", failure,
                static_cast<long long>(first.records.size()));
}

std::vector<std::string> suite_names() {
  return {"graph-ops",       "matching-engine",     "extremal-closed-forms",
          "eg-exhaustive",   "oracle-equivalence",  "lemma1-identity",
          "delta-lemma",     "deficiency-chain",    "bipartite-extractor",
          "swap-family",     "theorem2",            "experiment-grid"};
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed,
                                    bool full) {
  std::vector<std::string> wanted = names;
  if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) wanted = suite_names();
  std::vector<SuiteResult> results;
  for (const std::string& name : wanted) {
    if (name == "graph-ops") results.push_back(suite_graph_ops(seed, full ? 300 : 100));
    else if (name == "matching-engine")
      results.push_back(suite_matching_engine(seed, full ? 400 : 150, 12));
    else if (name == "extremal-closed-forms") results.push_back(suite_extremal_closed_forms());
    else if (name == "eg-exhaustive") results.push_back(suite_eg_exhaustive(full ? 7 : 6));
    else if (name == "oracle-equivalence")
      results.push_back(suite_oracle_equivalence(seed, full ? 1000 : 200, 12));
    else if (name == "lemma1-identity")
      results.push_back(suite_lemma1_identity(seed, full ? 10000 : 2000));
    else if (name == "delta-lemma") results.push_back(suite_delta_lemma(full ? 100000 : 100000));
    else if (name == "deficiency-chain")
      results.push_back(suite_deficiency_chain(seed, full ? 250 : 100, 12));
    else if (name == "bipartite-extractor")
      results.push_back(suite_bipartite_extractor(seed, full ? 50 : 10));
    else if (name == "swap-family") results.push_back(suite_swap_family(seed, 15));
    else if (name == "theorem2") results.push_back(suite_theorem2(seed, full ? 200 : 50));
    else if (name == "experiment-grid") results.push_back(suite_experiment_grid(seed));
    else
      results.push_back(SuiteResult{name, false, 0, "unknown suite"});
  }
  return results;
}

}  // namespace matchkit
