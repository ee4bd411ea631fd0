#include <doctest.h>

#include <random>
#include <stdexcept>

#include "matchkit/bounds.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/harness.hpp"

using namespace matchkit;

TEST_CASE("extremal size formula") {
  CHECK(eg_max_size(10, 2) == 17);
  CHECK(eg_max_size(6, 2) == 10);
  for (int n = 0; n <= 20; ++n) CHECK(eg_max_size(n, 0) == 0);
  CHECK(eg_max_size(5, 2) == 10);
  CHECK_THROWS_AS(eg_max_size(4, 3), std::invalid_argument);

  // Both branches agree exactly at 5s = 2n-3.
  for (long long n = 4; n <= 200; ++n) {
    if ((2 * n - 3) % 5 != 0) continue;
    long long s = (2 * n - 3) / 5;
    if (2 * s > n) continue;
    CHECK(s * (n - s) + choose2(s) == choose2(2 * s + 1));
  }

  CHECK(eg_bound_attainable(10, 2));
  CHECK(eg_bound_attainable(10, 0));
  CHECK_FALSE(eg_bound_attainable(6, 3));  // 2s = n: value exceeds C(n,2)
  CHECK(eg_max_size(6, 3) == 21);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(4, 4) == 24);
  CHECK_THROWS_AS(falling_factorial(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(falling_factorial(3, -1), std::invalid_argument);
}

TEST_CASE("closed-form family counts") {
  CHECK(extremal_count_i(7, 2) == 20);
  CHECK(extremal_count_ii(3, 1) == 3);
  CHECK(extremal_count_ii(9, 2) == 15);
  CHECK(extremal_count_ii(11, 5) == 10395);
  CHECK_THROWS_AS(extremal_count_ii(4, 2), std::invalid_argument);
}

TEST_CASE("m* formula") {
  CHECK(m_star_size(5, 5, 1, 0) == 10);
  CHECK(m_star_size(3, 2, 2, 1) == 2);
  CHECK(m_star_size(4, 0, 0, 0) == 6);
  CHECK_THROWS_AS(m_star_size(4, 1, 2, 0), std::invalid_argument);  // d < k
  CHECK_THROWS_AS(m_star_size(4, 4, 0, 1), std::invalid_argument);  // d > n-a
}

TEST_CASE("g on both branches") {
  CHECK(g_value(Rational(0), Rational(0), Rational(1, 5), EgBranch::split) == 0);
  CHECK(g_value(Rational(1, 10), Rational(1, 10), Rational(1, 5), EgBranch::split) ==
        Rational(3, 40));
  CHECK(g_value(Rational(2, 5), Rational(1, 20), Rational(9, 20), EgBranch::clique) ==
        Rational(59, 800));
  CHECK_THROWS_AS(g_value(Rational(1, 2), Rational(0), Rational(1, 5), EgBranch::split),
                  std::invalid_argument);  // x > nu
  CHECK_THROWS_AS(g_value(Rational(1, 10), Rational(1, 2), Rational(1, 5), EgBranch::split),
                  std::invalid_argument);  // y > 2x
}

TEST_CASE("quadratic-part identity") {
  CHECK(verify_lemma1_identity(10, 3, 2, 8));
  // ... where both sides of the split identity equal 11/2:
  {
    long long n = 10, s = 3, a = 2, d = 8, k = n - 2 * s + a;
    Rational lhs = Rational(s * (n - s)) + Rational(s * s, 2) -
                   (Rational((d - k) * (d - k), 2) + Rational(d * a) +
                    Rational((n - d) * (n - d), 2));
    CHECK(lhs == Rational(11, 2));
    Rational x(s - a, n), y(d - k, n), nu(s, n);
    CHECK((x * (1 - nu - Rational(3, 2) * x) + y * (2 * x - y)) * n * n == Rational(11, 2));
  }
  CHECK(verify_lemma1_identity(5, 2, 0, 5));
  CHECK_THROWS_AS(verify_lemma1_identity(10, 3, 4, 8), std::invalid_argument);  // a > s
}

TEST_CASE("degeneration condition and case classification") {
  Rational fifth(1, 5), twentieth(1, 20);
  CHECK(condition_e3_holds(Rational(1, 10), Rational(1, 10), fifth, twentieth));
  CHECK_FALSE(condition_e3_holds(Rational(0), Rational(0), fifth, twentieth));
  CHECK_THROWS_AS(condition_e3_holds(Rational(0), Rational(0), fifth, Rational(0)),
                  std::invalid_argument);

  CHECK(classify_case(Rational(1, 100), Rational(0), fifth, twentieth) == CaseLabel::case1);
  // x > nu-delta, nu > 2/5-2delta/5, y below delta:
  CHECK(classify_case(Rational(9, 20), Rational(1, 200), Rational(9, 20), Rational(1, 100)) ==
        CaseLabel::case2);
  // same corner but y above 2nu-3delta:
  CHECK(classify_case(Rational(9, 20), Rational(22, 25), Rational(9, 20), Rational(1, 100)) ==
        CaseLabel::case3);
  // At y exactly delta, or y within [delta, 2nu-3delta], the condition holds.
  CHECK(classify_case(Rational(9, 20), Rational(1, 100), Rational(9, 20), Rational(1, 100)) ==
        CaseLabel::none);
  CHECK(classify_case(Rational(9, 20), Rational(4, 5), Rational(9, 20), Rational(1, 100)) ==
        CaseLabel::none);

  // The trichotomy is exhaustive whenever the condition fails.
  std::mt19937_64 rng(51);
  for (int t = 0; t < 4000; ++t) {
    Rational nu(1 + static_cast<long long>(bounded_random(rng, 40)), 80);
    Rational x = nu * Rational(static_cast<long long>(bounded_random(rng, 33)), 32);
    if (x > nu) x = nu;
    Rational y = 2 * x * Rational(static_cast<long long>(bounded_random(rng, 33)), 32);
    Rational delta(1 + static_cast<long long>(bounded_random(rng, 30)), 100);
    CaseLabel label = classify_case(x, y, nu, delta);
    CHECK((label == CaseLabel::none) == condition_e3_holds(x, y, nu, delta));
  }
}

TEST_CASE("full-range count bound record") {
  Theorem1Result wide = theorem1_bound(100, 20);
  CHECK(wide.bound == 90);
  CHECK_FALSE(wide.scale_ok);

  Theorem1Result tiny = theorem1_bound(10, 1);
  CHECK(tiny.bound == 1);
  CHECK_FALSE(tiny.scale_ok);
  CHECK(tiny.deficiency_tolerance == 0);

  Theorem1Result boundary = theorem1_bound(10000, 5000);
  CHECK(boundary.scale_ok);  // (nu/50)^2 n = 1 exactly at nu = 1/2, n = 10^4
  CHECK(boundary.deficiency_tolerance == 10000);
  CHECK(boundary.bound == falling_factorial(1000, 500));
}

TEST_CASE("small-nu thresholds") {
  CHECK(theorem2_h_nu(Rational(1, 2)) == Rational(4, 21));
  Theorem2Params p = theorem2_thresholds(Rational(1, 2), Rational(1, 10));
  CHECK(p.h_delta == Rational(7, 15360));
  CHECK(theorem2_bound(100, 10, Rational(1, 2)) == falling_factorial(50, 5));

  CHECK_THROWS_AS(theorem2_h_nu(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_thresholds(Rational(1, 2), Rational(1, 5)), std::invalid_argument);
}

TEST_CASE("bound report for a near-boundary graph") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  BoundReport report = compute_bound_report(c5, decompose(c5));
  CHECK(report.s == 2);
  CHECK(report.m == 5);
  CHECK(report.branch == EgBranch::clique);
  CHECK(report.m_eg == 10);
  CHECK(report.m_star == 10);
  CHECK(report.m_closure == 10);
  CHECK(report.deficiency == 5);
  CHECK(report.x == Rational(2, 5));
  CHECK(report.y == Rational(4, 5));
  CHECK(report.delta == Rational(2, 125));
  CHECK(report.case_label == CaseLabel::case3);
  CHECK(report.m <= report.m_closure);
  CHECK(report.m_closure <= report.m_star);
  CHECK(report.m_star <= report.m_eg);
}
