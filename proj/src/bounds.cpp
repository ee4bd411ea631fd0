#include "matchkit/bounds.hpp"

#include <stdexcept>

namespace matchkit {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

EgBranch eg_branch(long long n, long long s) {
  require(s >= 0 && 2 * s <= n, "eg_branch: requires 0 <= 2s <= n");
  return 5 * s <= 2 * n - 3 ? EgBranch::split : EgBranch::clique;
}

long long eg_max_size(long long n, long long s) {
  require(s >= 0 && 2 * s <= n, "eg_max_size: requires 0 <= 2s <= n");
  if (eg_branch(n, s) == EgBranch::split) return s * (n - s) + choose2(s);
  return choose2(2 * s + 1);
}

bool eg_bound_attainable(long long n, long long s) {
  require(s >= 0 && 2 * s <= n, "eg_bound_attainable: requires 0 <= 2s <= n");
  return s == 0 || 2 * s < n;
}

BigCount extremal_count_i(long long n, long long s) {
  require(s >= 0 && 2 * s <= n, "extremal_count_i: requires 0 <= 2s <= n");
  return falling_factorial(n - s, s);
}

BigCount extremal_count_ii(long long n, long long s) {
  require(s >= 0 && 2 * s + 1 <= n, "extremal_count_ii: requires 2s+1 <= n");
  return big_factorial(2 * s + 1) / (big_factorial(s) * (BigCount(1) << s));
}

long long m_star_size(long long n, long long d, long long k, long long a) {
  require(n >= 0 && d >= 0 && k >= 0 && a >= 0, "m_star: negative argument");
  require(k <= d && d <= n - a, "m_star: requires k <= d <= n-a");
  return choose2(d - k + 1) + d * a + choose2(n - d);
}

Rational g_value(const Rational& x, const Rational& y, const Rational& nu, EgBranch branch) {
  require(x >= 0 && x <= nu, "g_value: requires 0 <= x <= nu");
  require(y >= 0 && y <= 2 * x, "g_value: requires 0 <= y <= 2x");
  Rational mixed = y * (2 * x - y);
  if (branch == EgBranch::split) return x * (1 - nu - Rational(3, 2) * x) + mixed;
  return (nu - x) * (Rational(5, 2) * nu + Rational(3, 2) * x - 1) + mixed;
}

bool verify_lemma1_identity(long long n, long long s, long long a, long long d) {
  require(n >= 1, "lemma1 identity: requires n >= 1");
  require(0 <= a && a <= s && 2 * s <= n, "lemma1 identity: requires 0 <= a <= s <= n/2");
  long long k = n - 2 * s + a;
  require(k <= d && d <= n - a, "lemma1 identity: requires k <= d <= n-a");

  Rational nu(s, n), x(s - a, n), y(d - k, n);
  Rational nn = Rational(n) * Rational(n);
  Rational star_quadratic = Rational((d - k) * (d - k), 2) + Rational(d * a) +
                            Rational((n - d) * (n - d), 2);

  Rational lhs_split = Rational(s * (n - s)) + Rational(s * s, 2) - star_quadratic;
  Rational rhs_split = (x * (1 - nu - Rational(3, 2) * x) + y * (2 * x - y)) * nn;

  Rational lhs_clique = Rational(2 * s * s) - star_quadratic;
  Rational rhs_clique =
      ((nu - x) * (Rational(5, 2) * nu + Rational(3, 2) * x - 1) + y * (2 * x - y)) * nn;

  return lhs_split == rhs_split && lhs_clique == rhs_clique;
}

bool condition_e3_holds(const Rational& x, const Rational& y, const Rational& nu,
                        const Rational& delta) {
  require(delta > 0, "condition: requires delta > 0");
  Rational two_fifths(2, 5);
  bool first = x >= delta || nu >= two_fifths + Rational(2, 5) * delta;
  bool second = x <= nu - delta || nu <= two_fifths - Rational(2, 5) * delta ||
                (delta <= y && y <= 2 * nu - 3 * delta);
  return first && second;
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::none: return "none";
    case CaseLabel::case1: return "case1";
    case CaseLabel::case2: return "case2";
    case CaseLabel::case3: return "case3";
  }
  return "?";
}

CaseLabel classify_case(const Rational& x, const Rational& y, const Rational& nu,
                        const Rational& delta) {
  if (condition_e3_holds(x, y, nu, delta)) return CaseLabel::none;
  Rational two_fifths(2, 5);
  if (x < delta && nu < two_fifths + Rational(2, 5) * delta) return CaseLabel::case1;
  bool shared = x > nu - delta && nu > two_fifths - Rational(2, 5) * delta;
  if (shared && y < delta) return CaseLabel::case2;
  if (shared && y > 2 * nu - 3 * delta) return CaseLabel::case3;
  // The negation of the condition is exactly the union of the three cases.
  throw std::logic_error("classify_case: trichotomy not exhaustive");
}

Theorem1Result theorem1_bound(long long n, long long s) {
  require(s >= 1 && 2 * s <= n, "theorem1_bound: requires 1 <= 2s <= n");
  Theorem1Result out;
  out.scale_ok = s * s >= 2500 * n;
  out.deficiency_tolerance = (s * s) / 2500;
  out.bound = falling_factorial((n + 9) / 10, (s + 9) / 10);
  return out;
}

Rational theorem2_h_nu(const Rational& epsilon) {
  require(epsilon > 0 && epsilon < 1, "theorem2: requires 0 < epsilon < 1");
  Rational half = epsilon / 2;
  Rational candidate = epsilon / (2 * (1 + half * (1 + half)));
  return candidate < Rational(1, 5) ? candidate : Rational(1, 5);
}

Theorem2Params theorem2_thresholds(const Rational& epsilon, const Rational& nu) {
  Theorem2Params p;
  p.epsilon = epsilon;
  p.nu = nu;
  p.h_nu = theorem2_h_nu(epsilon);
  require(nu > 0 && nu < p.h_nu, "theorem2: requires 0 < nu < h_nu(epsilon)");

  Rational half = epsilon / 2;
  Rational t = epsilon * epsilon / (2 * (2 - epsilon));  // 1 - eps/2 - (1-eps)/(1-eps/2)
  Rational capacity = (1 - half) * nu * (1 - (1 + half) * nu);
  Rational cap_a = epsilon * nu / 8;
  Rational cap_b = t * t * capacity;
  p.h_delta = cap_a < cap_b ? cap_a : cap_b;
  p.gamma = p.h_delta / capacity;

  // The closed form is only trusted after substituting back into the
  // constraints it was derived from.
  if (!(p.h_delta > 0 && p.h_delta <= epsilon * nu / 8))
    throw std::logic_error("theorem2: delta bound fails delta <= eps*nu/8");
  if (!(1 - (1 + half) * nu >= 1 - half))
    throw std::logic_error("theorem2: nu constraint 1-(1+eps/2)nu >= 1-eps/2 fails");
  // (1 - sqrt(gamma) - eps/2)(1 - eps/2) >= 1 - eps  <=>  gamma <= t^2.
  if (!(p.gamma <= t * t))
    throw std::logic_error("theorem2: gamma constraint fails");
  return p;
}

BigCount theorem2_bound(long long n, long long s, const Rational& epsilon) {
  require(epsilon > 0 && epsilon < 1, "theorem2_bound: requires 0 < epsilon < 1");
  require(n >= 0 && s >= 0 && 2 * s <= n, "theorem2_bound: requires 0 <= 2s <= n");
  long long top = ceil_to_ll((1 - epsilon) * Rational(n));
  long long len = ceil_to_ll((1 - epsilon) * Rational(s));
  return falling_factorial(top, len);
}

BoundReport compute_bound_report(const Graph& graph, const Decomposition& dec) {
  BoundReport r;
  r.n = graph.order();
  require(r.n >= 1, "bound report: requires n >= 1");
  r.m = graph.size();
  r.s = matching_number(graph);
  r.a = dec.a();
  r.c = dec.c();
  r.d = dec.d();
  r.k = dec.k();
  r.m_eg = eg_max_size(r.n, r.s);
  r.eg_attainable = eg_bound_attainable(r.n, r.s);
  r.m_star = m_star_size(r.n, r.d, r.k, r.a);
  r.m_closure = closure_size_formula(graph, dec);
  r.deficiency = r.m_eg - r.m;
  r.x = Rational(r.s - r.a, r.n);
  r.y = Rational(r.d - r.k, r.n);
  r.branch = eg_branch(r.n, r.s);
  Rational nu(r.s, r.n);
  r.g = g_value(r.x, r.y, nu, r.branch);
  r.delta = nu / 25;  // delta = 2 sqrt(eps) at eps = (nu/50)^2
  r.case_label = r.s == 0 ? CaseLabel::none : classify_case(r.x, r.y, nu, r.delta);
  if (r.s >= 1) {
    Theorem1Result t1 = theorem1_bound(r.n, r.s);
    r.theorem1_scale_ok = t1.scale_ok;
    r.theorem1_deficiency_tolerance = t1.deficiency_tolerance;
    r.theorem1_applicable = t1.scale_ok && r.deficiency <= t1.deficiency_tolerance;
    r.theorem1_count_bound = t1.bound;
  }
  return r;
}

}  // namespace matchkit
