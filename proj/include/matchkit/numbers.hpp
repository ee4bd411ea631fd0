#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace matchkit {

// Exact arithmetic only: matching counts grow factorially and every branch
// condition in the bounds module is an integer or rational comparison.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n(n-1)...(n-k+1); the empty product 1 for k = 0. Requires 0 <= k <= n.
BigCount falling_factorial(long long n, long long k);

BigCount big_factorial(long long n);

/// x(x-1)/2 for x >= 0 (0 when x < 2).
long long choose2(long long x);

Rational make_rational(long long num, long long den);

boost::multiprecision::cpp_int floor_rational(const Rational& r);
boost::multiprecision::cpp_int ceil_rational(const Rational& r);
long long ceil_to_ll(const Rational& r);
long long floor_to_ll(const Rational& r);

/// Smallest integer t with t >= c - sqrt(radicand); radicand >= 0.
/// Evaluated exactly (no floating point) by testing t >= c or
/// radicand >= (c - t)^2.
long long ceil_minus_sqrt(const Rational& c, const Rational& radicand);

}  // namespace matchkit
