#include "gessel/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gessel {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw PreconditionViolation("leading: zero polynomial");
    return coeffs_.back();
}

bool Polynomial::integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return denominator(c) == 1; });
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(-1);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> r = coeffs_;
    for (auto& x : r) x *= c;
    return Polynomial(std::move(r));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c < 0 ? Rational(-c) : c;
        bool unit = (a == 1 && i > 0);
        if (!unit) os << rational_str(a);
        if (i > 0) {
            if (!unit) os << ' ';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw PreconditionViolation("interpolate: empty point list");
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa("interpolate: repeated x = " +
                                        rational_str(points[i].first));

    // diffs[i] holds f[x_i, ..., x_{i+k}] after pass k.
    std::vector<Rational> diffs(n);
    for (size_t i = 0; i < n; ++i) diffs[i] = points[i].second;
    std::vector<Rational> newton(n); // leading divided differences
    newton[0] = diffs[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i)
            diffs[i] = (diffs[i + 1] - diffs[i]) / (points[i + k].first - points[i].first);
        newton[k] = diffs[0];
    }

    Polynomial result = Polynomial::constant(newton[0]);
    Polynomial basis = Polynomial::constant(1);
    for (size_t k = 1; k < n; ++k) {
        basis = basis * Polynomial({-points[k - 1].first, 1});
        result = result + basis.scaled(newton[k]);
    }
    return result;
}

} // namespace gessel
