#include "matchkit/numbers.hpp"

#include <stdexcept>

namespace matchkit {

BigCount falling_factorial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("falling_factorial: requires 0 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  BigCount out = 1;
  for (long long i = 0; i < k; ++i) out *= (n - i);
  return out;
}

BigCount big_factorial(long long n) { return falling_factorial(n, n); }

long long choose2(long long x) {
  if (x < 0) throw std::invalid_argument("choose2: negative argument");
  return x < 2 ? 0 : x * (x - 1) / 2;
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num, den);
}

boost::multiprecision::cpp_int floor_rational(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(r), den = denominator(r);  // den > 0 by normalization
  cpp_int q = num / den;                             // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

boost::multiprecision::cpp_int ceil_rational(const Rational& r) {
  return -floor_rational(-r);
}

long long ceil_to_ll(const Rational& r) {
  return ceil_rational(r).convert_to<long long>();
}

long long floor_to_ll(const Rational& r) {
  return floor_rational(r).convert_to<long long>();
}

long long ceil_minus_sqrt(const Rational& c, const Rational& radicand) {
  if (radicand < 0) throw std::invalid_argument("ceil_minus_sqrt: negative radicand");
  // t satisfies t >= c - sqrt(R)  iff  t >= c, or (c - t)^2 <= R.
  auto ok = [&](long long t) {
    Rational diff = c - t;
    return diff <= 0 || diff * diff <= radicand;
  };
  long long t = ceil_to_ll(c);  // always satisfies
  while (ok(t - 1)) --t;
  return t;
}

}  // namespace matchkit
