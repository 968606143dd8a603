#include "gessel/identities.hpp"

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "gessel/linalg.hpp"

namespace gessel {

namespace {

Rational rat(const CountInt& c) {
    return Rational(c);
}

// 4^n (3/2)_n collapses to (2n+1)!/n!, which keeps h/r values factorial-clean.
Rational poch_3half_times_4n(int n) {
    return Rational(factorial(2 * n + 1), factorial(n));
}

} // namespace

CountInt gessel_closed_form(int n) {
    if (n < 0) throw PreconditionViolation("gessel_closed_form: negative n");
    Rational v = rational_pow(Rational(16), n) * pochhammer(Rational(5, 6), n) *
                 pochhammer(Rational(1, 2), n) /
                 (pochhammer(Rational(2), n) * pochhammer(Rational(5, 3), n));
    return to_count(v);
}

CountInt c1_formula(int n) {
    if (n < 0) throw PreconditionViolation("c1_formula: negative n");
    Rational first = Rational(5, 27) * pochhammer(Rational(7, 6), n) / pochhammer(Rational(7, 3), n);
    Rational second = Rational(111LL * n * n + 183LL * n - 50, 270) *
                      pochhammer(Rational(5, 6), n) / pochhammer(Rational(8, 3), n);
    Rational v = rational_pow(Rational(16), n) * pochhammer(Rational(1, 2), n) /
                 pochhammer(Rational(3), n) * (first + second);
    return to_count(v);
}

CountInt c2_formula(int n, int k) {
    if (n < 0) throw PreconditionViolation("c2_formula: negative n");
    const Rational nn(n);
    switch (k) {
        case 0:
            return to_count(rational_pow(Rational(4), n) * pochhammer(Rational(1, 2), n) /
                            pochhammer(Rational(2), n));
        case 1:
            return to_count(rational_pow(Rational(2), 2 * n + 1) * Rational(n + 1) *
                            pochhammer(Rational(3, 2), n) / pochhammer(Rational(3), n));
        case 2: {
            Rational poly = (Rational(8) * nn + 32) * nn + 33;
            return to_count(rational_pow(Rational(4), n) * Rational(n + 1) * poly *
                            pochhammer(Rational(3, 2), n) /
                            (Rational(3) * pochhammer(Rational(4), n)));
        }
        case 3: {
            Rational poly = (((Rational(64) * nn + 672) * nn + 2648) * nn + 4641) * nn + 3060;
            return to_count(rational_pow(Rational(4), n - 1) * Rational(n + 1) * poly *
                            pochhammer(Rational(3, 2), n) /
                            (Rational(9) * pochhammer(Rational(5), n)));
        }
        default:
            throw PreconditionViolation("c2_formula: k must be in 0..3, got " + std::to_string(k));
    }
}

CountInt c4_formula(int n, int k) {
    if (n < 0) throw PreconditionViolation("c4_formula: negative n");
    const Rational nn(n);
    switch (k) {
        case 0:
            return 1;
        case 1:
            return to_count(Rational(n + 1) * Rational(n + 4) / 2);
        case 2: {
            Rational poly = ((nn + 15) * nn + 74) * nn + 132;
            return to_count(Rational(n + 1) * poly / 12);
        }
        case 3: {
            Rational poly = ((((nn + 32) * nn + 407) * nn + 2620) * nn + 8604) * nn + 12240;
            return to_count(Rational(n + 1) * poly / 144);
        }
        default:
            throw PreconditionViolation("c4_formula: k must be in 0..3, got " + std::to_string(k));
    }
}

CountInt boundary_formula(int m, int n1, int n2) {
    if (m < 0 || n1 < 0 || n2 < 0)
        throw PreconditionViolation("boundary_formula: negative argument");
    if (m == n1) return binomial(n1, n2);
    if (m == 2 * n2 - n1 && n1 <= n2)
        return to_count(Rational(n1 + 1, 2 * n2 - n1 + 1) *
                        rat(binomial(2 * n2 - n1 + 1, n2 + 1)));
    throw PreconditionViolation("boundary_formula: (" + std::to_string(m) + ", " +
                                std::to_string(n1) + ", " + std::to_string(n2) +
                                ") is not a boundary case");
}

CountInt half_plane_formula(int m, int n1, int n2) {
    if (m < 0 || n2 < 0)
        throw PreconditionViolation("half_plane_formula: negative length or height");
    if (n1 > m || n1 < -m)
        throw PreconditionViolation("half_plane_formula: |n1| > m is unreachable");
    if ((m - n1) % 2 != 0)
        throw PreconditionViolation("half_plane_formula: m and n1 must have equal parity");
    const long long h = (static_cast<long long>(m) - n1) / 2;
    return to_count(Rational(n2 + 1, m + 1) * rat(binomial(m + 1, h)) *
                    rat(binomial(m + 1, h + n2 + 1)));
}

EdgeRefinements fk_edge_formulas(int n) {
    if (n < 1) throw PreconditionViolation("fk_edge_formulas: n must be >= 1");
    EdgeRefinements e;
    e.f0 = catalan(n);
    e.f_n = catalan(n);
    e.f_n_minus_1 = to_count(Rational(2 * n + 1, 2) * rat(binomial(2 * n, n)) -
                             rational_pow(Rational(2), 2 * n - 1));
    return e;
}

SplitFormulas p_split_formulas(int n) {
    if (n < 0) throw PreconditionViolation("p_split_formulas: negative n");
    SplitFormulas f;
    const CountInt c2n = binomial(2 * n, n);
    f.p1_printed = to_count(Rational(c2n * c2n, n + 1));
    f.p2 = to_count(Rational(c2n * binomial(2 * n + 2, n), CountInt(n + 1) * binomial(n + 3, n)));
    return f;
}

namespace {

void check_theorem_args(const char* who, int n, int k) {
    if (n < 0) throw PreconditionViolation(std::string(who) + ": n must be >= 0");
    if (k < 1) throw PreconditionViolation(std::string(who) + ": k must be >= 1");
}

} // namespace

CountInt theorem3_rhs(int n, int k, int r, const DPTable& quarter) {
    check_theorem_args("theorem3_rhs", n, k);
    if (r > n + k) throw PreconditionViolation("theorem3_rhs: r must be <= n + k");
    const long long top = static_cast<long long>(n) - k + r + 2;
    Rational sum = 0;
    for (int t = 0; t <= k - 2; ++t)
        sum += rat(binomial(top, n - t) - binomial(top, n + t + 3)) *
               rat(quarter.count(2 * k - 2, 2 * t + 2, t));
    for (int s = 0; s <= k - 1; ++s)
        for (int t = 0; t <= k - 1; ++t)
            sum += rat(binomial(top, s + 1)) *
                   rat(binomial(top, n - t + 1) - binomial(top, n + t + 2)) *
                   rat(quarter.count(2 * k - 2, 2 * t, s + t));
    return to_count(sum);
}

CountInt theorem3_rhs_alt(int n, int k, int r, const DPTable& quarter) {
    check_theorem_args("theorem3_rhs_alt", n, k);
    if (r > n + k) throw PreconditionViolation("theorem3_rhs_alt: r must be <= n + k");
    const long long top = static_cast<long long>(n) - k + r + 2;
    Rational sum = 0;
    for (int t = 0; t <= k - 2; ++t)
        sum += rat(binomial(top, n - t) - binomial(top, n + t + 3)) *
               rat(quarter.count(2 * k - 2, 2 * t + 2, t));
    for (int s = 0; s <= k - 1; ++s)
        for (int t = -1; t <= k - 2; ++t)
            sum += rat(binomial(top, k - s)) *
                   rat(binomial(top, n - t) - binomial(top, n + t + 3)) *
                   rat(quarter.count(2 * k - 2, 2 * t + 2, k - s + t));
    return to_count(sum);
}

CountInt eq19_rhs(int n, int k, const DPTable& quarter) {
    check_theorem_args("eq19_rhs", n, k);
    Rational sum = 0;
    for (int t = 0; t <= k - 2; ++t)
        sum += Rational(2 * t + 3, 2 * n + 3) * rat(binomial(2 * n + 3, n + t + 3)) *
               rat(quarter.count(2 * k - 2, 2 * t + 2, t));
    for (int s = 0; s <= k - 1; ++s)
        for (int t = 0; t <= k - 1; ++t)
            sum += Rational(2 * t + 1, 2 * n + 3) * rat(binomial(2 * n + 2, s + 1)) *
                   rat(binomial(2 * n + 3, n + t + 2)) *
                   rat(quarter.count(2 * k - 2, 2 * t, s + t));
    return to_count(sum);
}

CountInt theorem5_rhs(int n, int k, const DPTable& quarter) {
    check_theorem_args("theorem5_rhs", n, k);
    Rational sum = 0;
    for (int s = 1; s <= k; ++s)
        for (int t = 0; t <= s; ++t)
            sum += Rational(s - t + 1, n + 2) * rat(binomial(n + 2, s + 1)) *
                   rat(binomial(n + 2, t)) * rat(quarter.count(2 * k - 1, 2 * s - 1, s - t));
    return to_count(sum);
}

std::vector<IdentityInstance> c3_check(int n_max, const DPTable& quarter) {
    if (n_max < 1) throw PreconditionViolation("c3_check: n_max must be >= 1");
    std::vector<IdentityInstance> out;
    auto g = [&](int i) { return quarter.count(2 * i + 1, 1, 0); };
    for (int n = 1; n <= n_max; ++n) {
        const CountInt a = CountInt(n + 3) * (3 * n + 7) * (3 * n + 8) * g(n + 1);
        const CountInt b = CountInt(8) * (2 * n + 3) * (18 * n * n + 54 * n + 35) * g(n);
        const CountInt c = CountInt(256) * n * (3 * n + 1) * (3 * n + 2) * g(n - 1);
        out.push_back(make_instance("eq7", {{"n", n}}, a - b + c, CountInt(0)));
    }
    return out;
}

std::vector<IdentityInstance> a_recurrence_check(int m_max, const DPTable& diagonal) {
    if (m_max < 1) throw PreconditionViolation("a_recurrence_check: m_max must be >= 1");
    std::vector<IdentityInstance> out;
    std::vector<CountInt> a(static_cast<size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) a[static_cast<size_t>(m)] = diagonal_total(diagonal, m);
    for (int m = 1; m <= m_max; ++m) {
        const bool even = (m % 2 == 0);
        const long long u = even ? m / 2 : (m - 1) / 2;
        const Rational factor = even ? Rational(12 * u + 2, 3 * u + 1) : Rational(4 * u + 2, u + 1);
        out.push_back(make_instance(even ? "eq24_even" : "eq24_odd", {{"m", m}},
                                    Rational(a[static_cast<size_t>(m)]),
                                    factor * Rational(a[static_cast<size_t>(m) - 1])));
    }
    return out;
}

CountInt quarter_layer_sum(const DPTable& quarter, int m) {
    if (quarter.region() != Region::QuarterPlane)
        throw RegionMismatch("quarter_layer_sum needs a quarter-plane table");
    CountInt total = 0;
    for (const auto& [p, c] : quarter.layer(m)) total += c;
    return total;
}

namespace {

struct InterpolatedPair {
    Polynomial poly;
    bool validated;
};

// Interpolate through n = 0..2k, then demand exact agreement at the next
// four integers; a wrong ansatz shows up as a validation miss, not a crash.
template <typename ValueFn>
InterpolatedPair interpolate_and_validate(int k, ValueFn value) {
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(static_cast<size_t>(2 * k) + 1);
    for (int n = 0; n <= 2 * k; ++n) pts.emplace_back(Rational(n), value(n));
    InterpolatedPair out{interpolate(pts), true};
    for (int n = 2 * k + 1; n <= 2 * k + 4; ++n)
        out.validated = out.validated && out.poly(Rational(n)) == value(n);
    return out;
}

} // namespace

PolynomialFinding c2_extract(int k, const DPTable& quarter) {
    if (k < 1) throw PreconditionViolation("c2_extract: k must be >= 1");
    auto f = [&](int n) { return rat(quarter.count(2 * n + 2 * k, 0, n)); };
    auto h_val = [&](int n) {
        return Rational(factorial(n) * factorial(k) * factorial(n + k + 1),
                        factorial(2 * n + 2)) *
               f(n);
    };
    auto r_val = [&](int n) {
        return f(n) * pochhammer(Rational(k + 2), n) / poch_3half_times_4n(n);
    };
    auto h = interpolate_and_validate(k, h_val);
    auto r = interpolate_and_validate(k, r_val);

    PolynomialFinding out;
    out.family = "r";
    out.k = k;
    out.poly = r.poly;
    out.normalized = h.poly;
    out.degree_ok = h.poly.degree() == 2 * k - 2 && r.poly.degree() == 2 * k - 1 &&
                    h.validated && r.validated;
    out.integrality_ok = h.poly.integer_coefficients();
    out.leading_ok = !h.poly.is_zero() && h.poly.leading() == rational_pow(Rational(2), 3 * k - 2);
    out.divisibility_ok = r.poly(Rational(-1)) == 0;
    return out;
}

PolynomialFinding c4_extract(int k, const DPTable& quarter) {
    if (k < 1) throw PreconditionViolation("c4_extract: k must be >= 1");
    auto s_val = [&](int n) { return rat(quarter.count(n + 2 * k, n, 0)); };
    auto h_val = [&](int n) {
        return Rational(factorial(k) * factorial(k + 1), n + 1) * s_val(n);
    };
    auto s = interpolate_and_validate(k, s_val);
    auto h = interpolate_and_validate(k, h_val);

    PolynomialFinding out;
    out.family = "s";
    out.k = k;
    out.poly = s.poly;
    out.normalized = h.poly;
    out.degree_ok = s.poly.degree() == 2 * k && h.poly.degree() == 2 * k - 1 &&
                    s.validated && h.validated;
    out.integrality_ok = h.poly.integer_coefficients();
    out.leading_ok = !h.poly.is_zero() && h.poly.leading() == 1;
    out.divisibility_ok = s.poly(Rational(-1)) == 0;
    return out;
}

C1Fit c1_fit(int k, int sample_count, const DPTable& quarter) {
    if (k < 1) throw PreconditionViolation("c1_fit: k must be >= 1");
    const int unknowns = 4 * k;
    if (sample_count < unknowns)
        throw PreconditionViolation("c1_fit: need at least " + std::to_string(unknowns) +
                                    " sample points for k = " + std::to_string(k));

    auto common = [&](int n) {
        return rational_pow(Rational(16), n) * pochhammer(Rational(1, 2), n) /
               pochhammer(Rational(k + 2), n);
    };
    auto a_coef = [&](int n) {
        return common(n) * pochhammer(Rational(7, 6), n) / pochhammer(Rational(3 * k + 4, 3), n);
    };
    auto b_coef = [&](int n) {
        return common(n) * pochhammer(Rational(5, 6), n) / pochhammer(Rational(3 * k + 5, 3), n);
    };
    auto f = [&](int n) { return rat(quarter.count(2 * n, 0, k)); };

    const int p_len = 2 * k - 1;
    const int q_len = 2 * k + 1;
    RationalMatrix mat;
    RationalVector rhs;
    for (int i = 0; i < unknowns; ++i) {
        const int n = k + i;
        RationalVector row(static_cast<size_t>(unknowns));
        const Rational an = a_coef(n);
        const Rational bn = b_coef(n);
        Rational power = 1;
        for (int j = 0; j < p_len; ++j, power *= n) row[static_cast<size_t>(j)] = an * power;
        power = 1;
        for (int j = 0; j < q_len; ++j, power *= n)
            row[static_cast<size_t>(p_len + j)] = bn * power;
        mat.push_back(std::move(row));
        rhs.push_back(f(n));
    }
    RationalVector sol = solve_linear(std::move(mat), std::move(rhs));

    C1Fit fit;
    fit.k = k;
    fit.p = Polynomial(std::vector<Rational>(sol.begin(), sol.begin() + p_len));
    fit.q = Polynomial(std::vector<Rational>(sol.begin() + p_len, sol.end()));
    fit.degree_ok = !fit.p.is_zero() && !fit.q.is_zero() && fit.p.degree() <= 2 * k - 2 &&
                    fit.q.degree() <= 2 * k;
    fit.holdout_ok = true;
    for (int i = unknowns; i < sample_count; ++i) {
        const int n = k + i;
        const Rational predicted = a_coef(n) * fit.p(Rational(n)) + b_coef(n) * fit.q(Rational(n));
        auto inst = make_instance("c1_fit_holdout", {{"k", k}, {"n", n}}, predicted, f(n));
        fit.holdout_ok = fit.holdout_ok && inst.passed;
        fit.holdout.push_back(std::move(inst));
    }
    return fit;
}

} // namespace gessel
