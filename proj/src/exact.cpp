#include "gessel/exact.hpp"

#include <sstream>

namespace gessel {

CountInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    CountInt r = 1;
    // r stays integral after each division: r is C(n-k+i, i) at step i.
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

CountInt factorial(long long n) {
    if (n < 0) throw PreconditionViolation("factorial: negative argument " + std::to_string(n));
    CountInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

CountInt catalan(long long n) {
    if (n < 0) throw PreconditionViolation("catalan: negative argument " + std::to_string(n));
    return to_count(Rational(binomial(2 * n, n), n + 1));
}

Rational pochhammer(const Rational& a, long long n) {
    if (n < 0) throw PreconditionViolation("pochhammer: negative length " + std::to_string(n));
    Rational r = 1;
    Rational term = a;
    for (long long i = 0; i < n; ++i, term += 1) r *= term;
    return r;
}

Rational rational_pow(const Rational& base, long long exp) {
    if (exp < 0) {
        if (base == 0) throw PreconditionViolation("rational_pow: zero base with negative exponent");
        return rational_pow(Rational(1) / base, -exp);
    }
    Rational r = 1;
    Rational b = base;
    for (long long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

CountInt to_count(const Rational& r) {
    if (denominator(r) != 1)
        throw NonIntegerResult("to_count: " + rational_str(r) + " is not an integer");
    return numerator(r);
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

} // namespace gessel
