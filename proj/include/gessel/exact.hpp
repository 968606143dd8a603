#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// plus the handful of combinatorial primitives everything else is built on.
// Rationals are always in lowest terms with positive denominator; cpp_rational
// canonicalizes on every operation, so equality is plain operator==.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gessel/errors.hpp"

namespace gessel {

using CountInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) with the convention that any (n, k) outside 0 <= k <= n yields 0.
CountInt binomial(long long n, long long k);

// n! for n >= 0; PreconditionViolation otherwise.
CountInt factorial(long long n);

// C(2n, n) / (n + 1) for n >= 0.
CountInt catalan(long long n);

// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1. n >= 0.
Rational pochhammer(const Rational& a, long long n);

// base^exp for any integer exp; negative exp inverts (base must be nonzero).
Rational rational_pow(const Rational& base, long long exp);

// Exact conversion; NonIntegerResult if r has a nontrivial denominator.
CountInt to_count(const Rational& r);

// "p/q" in lowest terms, or just "p" when q == 1.
std::string rational_str(const Rational& r);

} // namespace gessel
