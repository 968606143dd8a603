#pragma once

// Dense univariate polynomials over exact rationals. Canonical form strips
// trailing zero coefficients; the zero polynomial is the empty vector and
// reports degree -1.

#include <string>
#include <utility>
#include <vector>

#include "gessel/exact.hpp"

namespace gessel {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const; // pre: !is_zero()
    bool integer_coefficients() const;

    Rational operator()(const Rational& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    bool operator==(const Polynomial& o) const = default;

    // Human-readable form, highest degree first, e.g. "1/2 n^2 + 5/2 n + 2".
    std::string str(const std::string& var = "n") const;

private:
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies x^i
    void normalize();
};

// The unique polynomial of degree < points.size() through the given
// (x, y) pairs, via Newton divided differences carried out exactly.
// DuplicateAbscissa if two x values coincide; PreconditionViolation if empty.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

} // namespace gessel
