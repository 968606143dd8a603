#pragma once

// Closed forms, binomial-sum identities, recurrences, and polynomial
// extraction for the walk families counted by walk_dp / path_oracle.
// Every evaluator works in exact rational arithmetic and converts to
// CountInt only at the end, so a non-integral intermediate result is a
// hard error rather than a silent truncation.
//
// Identity ids (eq4, eq7, ...) are the stable labels used in reports;
// the README documents what each one asserts.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gessel/polynomial.hpp"
#include "gessel/report.hpp"
#include "gessel/walk_dp.hpp"

namespace gessel {

// --- closed forms -----------------------------------------------------

// 16^n (5/6)_n (1/2)_n / ((2)_n (5/3)_n): closed quarter-plane walks of
// length 2n (the hypergeometric product form of the counting sequence).
CountInt gessel_closed_form(int n);

// Quarter-plane walks of length 2n ending at (0, 1).
CountInt c1_formula(int n);

// Quarter-plane walks of length 2n+2k ending at (0, n), for k = 0..3.
CountInt c2_formula(int n, int k);

// Quarter-plane walks of length n+2k ending at (n, 0), for k = 0..3.
CountInt c4_formula(int n, int k);

// Boundary cases with a single binomial answer: walks of length n1 ending
// at (n1, n2) give C(n1, n2); walks of length 2*n2-n1 ending at (n1, n2)
// with n1 <= n2 give (n1+1)/(2n2-n1+1) * C(2n2-n1+1, n2+1).
// PreconditionViolation when (m, n1, n2) fits neither case.
CountInt boundary_formula(int m, int n1, int n2);

// Half-plane walks of length m ending at (n1, n2):
// (n2+1)/(m+1) * C(m+1, (m-n1)/2) * C(m+1, (m-n1)/2 + n2 + 1).
// PreconditionViolation on parity mismatch or |n1| > m or n2 < 0.
CountInt half_plane_formula(int m, int n1, int n2);

// For closed quarter-plane walks of length 2n refined by the number 2k of
// equal-pair steps: the k = 0 count, the k = n-1 closed form
// (2n+1)/2 * C(2n, n) - 2^(2n-1), and the k = n count. Pre: n >= 1.
struct EdgeRefinements {
    CountInt f0;
    CountInt f_n_minus_1;
    CountInt f_n;
};
EdgeRefinements fk_edge_formulas(int n);

// The two printed closed forms for the sign-split of closed walks:
// first  = C(2n, n)^2 / (n+1)            (as printed; known to disagree
//                                         with enumeration for n >= 1)
// second = C(2n,n) C(2n+2,n) / ((n+1) C(n+3,n)).
struct SplitFormulas {
    CountInt p1_printed;
    CountInt p2;
};
SplitFormulas p_split_formulas(int n);

// --- binomial double sums over small seed counts ----------------------

// Endpoint identity for F(n+k+r; n+k-r, n) as a double sum of binomials
// times length-(2k-2) seed counts; two algebraically equal printed forms.
// Pre: k >= 1, r <= n+k, table covers length 2k-2.
CountInt theorem3_rhs(int n, int k, int r, const DPTable& quarter);
CountInt theorem3_rhs_alt(int n, int k, int r, const DPTable& quarter);

// Specialization pattern for F(2n+2k; 0, n) as a double sum with
// denominator 2n+3.
CountInt eq19_rhs(int n, int k, const DPTable& quarter);

// Identity for F(n+2k; n, 0) as a double sum of binomials times
// length-(2k-1) seed counts, denominator n+2. Pre: k >= 1.
CountInt theorem5_rhs(int n, int k, const DPTable& quarter);

// --- recurrences and cross-sums ---------------------------------------

// Three-term recurrence for g(n) = F(2n+1; 1, 0):
//   (n+3)(3n+7)(3n+8) g(n+1) - 8(2n+3)(18n^2+54n+35) g(n)
//   + 256 n (3n+1)(3n+2) g(n-1) = 0,  n >= 1.
// One instance per n with lhs = residual, rhs = 0.
std::vector<IdentityInstance> c3_check(int n_max, const DPTable& quarter);

// Two-term quotient recurrence for diagonal-region totals a(m):
//   a(2u) = (12u+2)/(3u+1) a(2u-1),  a(2u+1) = (4u+2)/(u+1) a(2u).
std::vector<IdentityInstance> a_recurrence_check(int m_max, const DPTable& diagonal);

// Sum of the full quarter-plane layer m (equals the diagonal-region total
// of the same length under the eta -> -eta bijection).
CountInt quarter_layer_sum(const DPTable& quarter, int m);

// --- polynomial extraction --------------------------------------------

struct PolynomialFinding {
    std::string family;  // "r" or "s"
    int k = 0;
    Polynomial poly;          // the extracted factor named by family
    Polynomial normalized;    // companion: h for family "r" and "s"
    bool degree_ok = false;   // expected degrees and clean validation points
    bool integrality_ok = false; // h has integer coefficients
    bool leading_ok = false;     // h has the expected leading coefficient
    bool divisibility_ok = false; // poly vanishes at n = -1

    bool all_ok() const { return degree_ok && integrality_ok && leading_ok && divisibility_ok; }
};

// Interpolates, from counts F(2n+2k; 0, n), the degree-(2k-1) factor r_k in
//   F(2n+2k; 0, n) = 4^n (3/2)_n / (k+2)_n * r_k(n)
// and the normalized h(n) = n! k! (n+k+1)! / (2n+2)! * F(2n+2k; 0, n)
// (degree 2k-2, integer coefficients, leading coefficient 2^(3k-2)).
// Samples n = 0..2k, validates at n = 2k+1..2k+4. Pre: k >= 1.
PolynomialFinding c2_extract(int k, const DPTable& quarter);

// Interpolates, from counts F(n+2k; n, 0), the degree-2k factor s_k with
//   F(n+2k; n, 0) = s_k(n),  s_k(n) = (n+1)/ (k! (k+1)!) * h(n)
// where h (degree 2k-1) has integer coefficients and leading coefficient 1.
// Samples n = 0..2k, validates at n = 2k+1..2k+4. Pre: k >= 1.
PolynomialFinding c4_extract(int k, const DPTable& quarter);

// Exact least-structure fit for F(2n; 0, k): solves the square linear
// system for polynomials p_k (degree 2k-2) and q_k (degree 2k) in
//   F(2n; 0, k) = 16^n (1/2)_n / (k+2)_n *
//                 [ (7/6)_n / ((3k+4)/3)_n p_k(n)
//                   + (5/6)_n / ((3k+5)/3)_n q_k(n) ]
// using sample points n = k .. k+4k-1, then validates the fit on the
// remaining sample_count - 4k points. Pre: sample_count >= 4k, k >= 1.
struct C1Fit {
    int k = 0;
    Polynomial p;
    Polynomial q;
    bool degree_ok = false;  // fitted degrees within the ansatz bounds
    bool holdout_ok = false; // all validation points reproduced exactly
    std::vector<IdentityInstance> holdout; // one instance per held-out n
};
C1Fit c1_fit(int k, int sample_count, const DPTable& quarter);

// --- verification suites ----------------------------------------------

struct SuiteLimits {
    std::optional<int> n_max;
    std::optional<int> k_max;
    std::optional<int> oracle_cap; // cap for enumeration-backed sweeps
    std::optional<int> m_cap;      // refuse table builds beyond this length
};

const std::vector<std::string>& suite_names();

// Runs one suite (or all of them, preserving canonical order) and returns
// per-instance results. UnknownSuite for an unrecognized id;
// PreconditionViolation if the required table length exceeds m_cap.
SuiteResult run_suite(const std::string& suite_id, const SuiteLimits& limits);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& suite_ids,
                                    const SuiteLimits& limits);

} // namespace gessel
