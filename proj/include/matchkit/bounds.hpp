#pragma once

#include <string>

#include "matchkit/gallai_edmonds.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/numbers.hpp"

namespace matchkit {

/// Regime of the extremal size formula. `split` is the range 5s <= 2n-3
/// where the clique-joined-to-independent-set family is densest; `clique`
/// is the complementary range where the odd clique plus isolated vertices
/// wins. At 5s = 2n-3 both formulas agree.
enum class EgBranch { split, clique };
EgBranch eg_branch(long long n, long long s);

/// Maximum size of a graph of order n with matching number s:
/// s(n-s) + C(s,2) on the split branch, C(2s+1,2) on the clique branch.
/// Requires 0 <= 2s <= n.
long long eg_max_size(long long n, long long s);

/// False exactly at s = n/2 with n > 0, where the clique-branch value
/// C(n+1,2) exceeds C(n,2) and no graph attains it. The value is still
/// reported as-is; this flag marks it.
bool eg_bound_attainable(long long n, long long s);

/// Closed-form counts of maximum matchings in the two extremal families:
/// (n-s) falling s for family i, (2s+1)!/(s! 2^s) for family ii.
BigCount extremal_count_i(long long n, long long s);
BigCount extremal_count_ii(long long n, long long s);

/// m* = C(d-k+1,2) + d*a + C(n-d,2), an upper bound for the closure size
/// obtained by merging all components of G[D] into one. Requires
/// k <= d <= n-a and nonnegative arguments.
long long m_star_size(long long n, long long d, long long k, long long a);

/// Quadratic part of the deficiency in the variables x, y:
/// x(1-nu-3x/2) + y(2x-y) on the split branch,
/// (nu-x)(5nu/2+3x/2-1) + y(2x-y) on the clique branch.
/// Requires 0 <= x <= nu and 0 <= y <= 2x.
Rational g_value(const Rational& x, const Rational& y, const Rational& nu, EgBranch branch);

/// Checks, in exact rationals, that the quadratic parts of both branch
/// computations of m(n,nu) - m* equal g(x,y) n^2 with x = (s-a)/n and
/// y = (d-k)/n, k = n - 2s + a. Requires 0 <= a <= s and k <= d <= n-a.
bool verify_lemma1_identity(long long n, long long s, long long a, long long d);

/// The condition under which the deficiency stays quadratically large:
/// (x >= delta or nu >= 2/5 + 2delta/5) and
/// (x <= nu-delta or nu <= 2/5 - 2delta/5 or delta <= y <= 2nu - 3delta).
/// Requires delta > 0.
bool condition_e3_holds(const Rational& x, const Rational& y, const Rational& nu,
                        const Rational& delta);

/// How the decomposition degenerates when the condition above fails.
enum class CaseLabel { none, case1, case2, case3 };
std::string to_string(CaseLabel label);
CaseLabel classify_case(const Rational& x, const Rational& y, const Rational& nu,
                        const Rational& delta);

struct Theorem1Result {
  bool scale_ok = false;                // (nu/50)^2 n >= 1, i.e. s^2 >= 2500 n
  long long deficiency_tolerance = 0;   // floor(s^2 / 2500)
  BigCount bound;                       // ceil(n/10) falling ceil(s/10)
};
Theorem1Result theorem1_bound(long long n, long long s);

struct Theorem2Params {
  Rational epsilon, nu, h_nu, h_delta, gamma;
};
Rational theorem2_h_nu(const Rational& epsilon);
/// Largest delta satisfying both constraint groups of the small-nu bound:
/// min{ eps*nu/8, t^2 (1-eps/2) nu (1-(1+eps/2)nu) } with
/// t = eps^2 / (2(2-eps)). Self-checks the constraints before returning.
/// Requires 0 < eps < 1 and nu < h_nu(eps).
Theorem2Params theorem2_thresholds(const Rational& epsilon, const Rational& nu);
BigCount theorem2_bound(long long n, long long s, const Rational& epsilon);

/// Every scalar of the analysis for one graph.
struct BoundReport {
  long long n = 0, s = 0, m = 0;
  long long m_eg = 0, m_star = 0, m_closure = 0;
  bool eg_attainable = true;
  long long deficiency = 0;  // m_eg - m
  long long a = 0, c = 0, d = 0, k = 0;
  Rational x, y;
  Rational delta;  // nu/25, the working threshold of the full-range bound
  Rational g;
  EgBranch branch = EgBranch::split;
  CaseLabel case_label = CaseLabel::none;
  bool theorem1_scale_ok = false;
  long long theorem1_deficiency_tolerance = 0;
  bool theorem1_applicable = false;  // scale and deficiency both within range
  BigCount theorem1_count_bound;
};
BoundReport compute_bound_report(const Graph& g, const Decomposition& dec);

}  // namespace matchkit
