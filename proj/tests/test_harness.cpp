#include <doctest.h>

#include <random>

#include "matchkit/bounds.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/harness.hpp"
#include "matchkit/serialize.hpp"

using namespace matchkit;

TEST_CASE("portable randomness") {
  std::mt19937_64 a(99), b(99);
  for (int t = 0; t < 100; ++t) {
    std::uint64_t draw = bounded_random(a, 17);
    CHECK(draw < 17);
    CHECK(draw == bounded_random(b, 17));
  }
  CHECK(sample_seed(1, 2, 3) == sample_seed(1, 2, 3));
  CHECK(sample_seed(1, 2, 3) != sample_seed(1, 3, 2));
  CHECK_THROWS_AS(bounded_random(a, 0), std::invalid_argument);
}

TEST_CASE("near-extremal sampling") {
  SampledInstance exact = sample_near_extremal(9, 2, 0, 1);
  CHECK(exact.family == "extremal_i");
  CHECK(exact.graph == extremal_i(9, 2));
  CHECK(exact.removed == 0);

  SampledInstance damaged = sample_near_extremal(9, 2, 2, 42, 500, true);
  CHECK(damaged.graph.size() >= eg_max_size(9, 2) - 2);
  CHECK(matching_number(damaged.graph) == 2);
  CHECK(damaged.removed == 2);
  REQUIRE(damaged.trace.size() == 2);
  CHECK(damaged.trace[0].count_after ==
        damaged.trace[0].count_before - damaged.trace[0].through_edge);
  CHECK(damaged.trace[0].count_before == extremal_count_i(9, 2));

  SampledInstance degenerate = sample_near_extremal(6, 3, 1, 7);
  CHECK(degenerate.family == "complete_degenerate");
  CHECK(degenerate.degenerate);
  CHECK(matching_number(degenerate.graph) == 3);
  CHECK(degenerate.graph.size() == 14);

  SampledInstance clique_side = sample_near_extremal(13, 5, 0, 3);
  CHECK(clique_side.family == "extremal_ii");

  // K_2 minus its only edge loses the matching number: budget must run out.
  CHECK_THROWS_AS(sample_near_extremal(2, 1, 1, 5, 20), std::runtime_error);
}

TEST_CASE("family closed forms") {
  CHECK(family_closed_form(9, 2, "extremal_i") == 42);  // 7*6
  CHECK(family_closed_form(13, 5, "extremal_ii") == 10395);
  CHECK(family_closed_form(6, 3, "complete_degenerate") == 15);
  CHECK_THROWS_AS(family_closed_form(6, 3, "nope"), std::invalid_argument);
}

TEST_CASE("config round-trips through JSON") {
  ExperimentConfig cfg;
  cfg.seed = 77;
  cfg.grid = {{9, 2, 0}, {9, 2, 3}, {11, 3, 1}};
  cfg.samples_per_cell = 2;
  cfg.counting_method = CountingMethod::brute;
  cfg.limits.max_a = 10;
  cfg.max_witnesses = 2;
  cfg.trace_removals = false;
  ExperimentConfig back = config_from_json(config_to_json(cfg));
  CHECK(back.seed == cfg.seed);
  CHECK(back.grid.size() == 3);
  CHECK(back.grid[1].delta == 3);
  CHECK(back.counting_method == CountingMethod::brute);
  CHECK(back.limits.max_a == 10);
  CHECK(back.trace_removals == false);

  CHECK_THROWS_AS(counting_method_from_string("fastest"), std::invalid_argument);
}

TEST_CASE("experiment runs are deterministic and self-checking") {
  ExperimentConfig cfg;
  cfg.seed = 5;
  cfg.grid = {{9, 2, 0}, {9, 2, 2}, {10, 3, 1}};
  cfg.samples_per_cell = 2;

  ExperimentResult first = run_experiment(cfg);
  CHECK(first.records.size() == 6);
  CHECK(first.all_ok);
  for (const auto& record : first.records) {
    CHECK(record.at("ok").get<bool>());
    CHECK(record.at("decomposition_verified").get<bool>());
    CHECK(record.at("counts").at("methods_agree").get<bool>());
  }
  // delta = 0 records hit the closed form exactly
  CHECK(first.records[0].at("counts").at("value").get<std::string>() ==
        first.records[0].at("closed_form").get<std::string>());

  ExperimentResult second = run_experiment(cfg);
  CHECK(records_to_jsonl(first.records) == records_to_jsonl(second.records));
}

TEST_CASE("empty grid yields an empty, successful report") {
  ExperimentConfig cfg;
  cfg.seed = 1;
  ExperimentResult result = run_experiment(cfg);
  CHECK(result.records.empty());
  CHECK(result.all_ok);
  CHECK(records_to_jsonl(result.records).empty());
}

TEST_CASE("serialization formats") {
  CHECK(rational_to_json(Rational(2, 6)).dump() == R"({"num":1,"den":3})");
  CHECK(rational_from_json(rational_to_json(Rational(-5, 7))) == Rational(-5, 7));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
  CHECK(count_to_string(falling_factorial(30, 30)) == "265252859812191058636308480000000");

  Decomposition dec = decompose(Graph(3, {{0, 1}, {1, 2}}));
  Json j = decomposition_to_json(dec);
  CHECK(j.dump() == R"({"D":[0,2],"A":[1],"C":[],"components":[[0],[2]]})");
  CHECK(decomposition_from_json(j) == dec);
}
