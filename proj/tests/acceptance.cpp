// Acceptance gate: one line per criterion, exact equality throughout
// (tolerance 0). Criteria are independent; a failure prints the first
// mismatch it saw and the run exits nonzero. Criterion 15 needs the CLI
// binary path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "gessel/identities.hpp"
#include "gessel/path_oracle.hpp"
#include "gessel/walk_dp.hpp"

using namespace gessel;

namespace {

int g_failures = 0;

void report(int number, bool ok, const std::string& what, const std::string& diag = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
    if (!ok && !diag.empty()) std::cout << " -- " << diag;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string point(const char* f, int m, int n1, int n2) {
    std::ostringstream os;
    os << f << "(" << m << ";" << n1 << "," << n2 << ")";
    return os.str();
}

// Every count displayed in the small-length walk tables: 5 + 5 + 12 + 9.
const std::vector<std::pair<std::array<int, 3>, CountInt>> kFixture = {
    {{2, 0, 0}, 2},  {{2, 0, 1}, 1},  {{2, 2, 0}, 1},  {{2, 2, 1}, 2},  {{2, 2, 2}, 1},
    {{3, 1, 0}, 5},  {{3, 1, 1}, 6},  {{3, 3, 0}, 1},  {{3, 3, 1}, 3},  {{3, 3, 2}, 3},
    {{4, 0, 0}, 11}, {{4, 0, 1}, 8},  {{4, 0, 2}, 2},  {{4, 2, 0}, 9},  {{4, 2, 1}, 17},
    {{4, 2, 2}, 12}, {{4, 2, 3}, 3},  {{4, 4, 0}, 1},  {{4, 4, 1}, 4},  {{4, 4, 2}, 6},
    {{4, 4, 3}, 4},  {{4, 4, 4}, 1},  {{5, 1, 0}, 37}, {{5, 1, 1}, 48}, {{5, 3, 0}, 14},
    {{5, 3, 1}, 36}, {{5, 3, 2}, 39}, {{5, 5, 0}, 1},  {{5, 5, 1}, 5},  {{5, 5, 2}, 10},
    {{5, 5, 3}, 10},
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const DPTable quarter(Region::QuarterPlane, 32);
    const DPTable half(Region::HalfPlane, 12);
    const DPTable diagonal(Region::BelowDiagonal, 14);

    // 1. Displayed small-length counts.
    {
        bool ok = true;
        std::string diag;
        for (const auto& [q, want] : kFixture) {
            const CountInt got = quarter.count(q[0], q[1], q[2]);
            if (got != want) {
                ok = false;
                diag = point("F", q[0], q[1], q[2]) + " = " + got.str() + ", table says " +
                       want.str();
                break;
            }
        }
        report(1, ok, "DP reproduces all 31 displayed small-length counts", diag);
    }

    // 2. Closed form for closed walks.
    {
        bool ok = true;
        std::string diag;
        for (int n = 0; n <= 12 && ok; ++n)
            if (gessel_closed_form(n) != quarter.count(2 * n, 0, 0)) {
                ok = false;
                diag = "n = " + std::to_string(n);
            }
        report(2, ok, "closed form equals DP F(2n;0,0) for 0 <= n <= 12", diag);
    }

    // 3. Oracle equivalence on whole layers.
    {
        bool ok = true;
        std::string diag;
        for (int m = 0; m <= 10 && ok; ++m) {
            if (quarter_surface(m) != quarter.layer(m)) {
                ok = false;
                diag = "quarter layer " + std::to_string(m);
            } else if (half_surface(m) != half.layer(m)) {
                ok = false;
                diag = "half layer " + std::to_string(m);
            }
        }
        report(3, ok, "brute-force oracle equals DP for every endpoint, m <= 10, both regions",
               diag);
    }

    // 4. Half-plane product formula vs DP and oracle.
    {
        bool ok = true;
        std::string diag;
        for (int m = 0; m <= 12 && ok; ++m) {
            auto surface = half_surface(m);
            for (int n1 = -m; n1 <= m && ok; n1 += 2)
                for (int n2 = 0; n2 <= (m + n1) / 2 + 2 && ok; ++n2) {
                    const CountInt formula = half_plane_formula(m, n1, n2);
                    const CountInt dp = half.count(m, n1, n2);
                    CountInt oracle = 0;
                    if (auto it = surface.find({n1, n2}); it != surface.end())
                        oracle = it->second;
                    if (formula != dp || formula != oracle) {
                        ok = false;
                        diag = point("G", m, n1, n2) + " formula=" + formula.str() +
                               " dp=" + dp.str() + " oracle=" + oracle.str();
                    }
                }
        }
        report(4, ok, "half-plane formula equals DP and oracle for all valid (m <= 12, n1, n2)",
               diag);
    }

    // 5. Boundary formulas on their full domains.
    {
        bool ok = true;
        std::string diag;
        for (int n1 = 0; n1 <= 12 && ok; ++n1)
            for (int n2 = 0; n2 <= n1 + 1 && ok; ++n2)
                if (boundary_formula(n1, n1, n2) != quarter.count(n1, n1, n2)) {
                    ok = false;
                    diag = "shortest-walk case " + point("F", n1, n1, n2);
                }
        for (int n2 = 0; n2 <= 12 && ok; ++n2)
            for (int n1 = 0; n1 <= n2 && ok; ++n1) {
                const int m = 2 * n2 - n1;
                if (m > 12) continue;
                if (boundary_formula(m, n1, n2) != quarter.count(m, n1, n2)) {
                    ok = false;
                    diag = "ballot case " + point("F", m, n1, n2);
                }
            }
        report(5, ok, "boundary formulas equal DP on their full domains for m <= 12", diag);
    }

    // 6. Endpoint double sum and its r = n+k specialization.
    {
        bool ok = true;
        std::string diag;
        for (int n = 0; n <= 8 && ok; ++n)
            for (int k = 1; k <= 4 && ok; ++k) {
                for (int r = -n; r <= n + k && ok; ++r) {
                    if (n + k + r < 2 * k - 2) continue; // walk shorter than the seed
                    const CountInt lhs = theorem3_rhs(n, k, r, quarter);
                    const CountInt rhs = quarter.count(n + k + r, n + k - r, n);
                    if (lhs != rhs) {
                        ok = false;
                        diag = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " r=" + std::to_string(r) + ": " + lhs.str() + " vs " + rhs.str();
                    }
                }
                if (ok && eq19_rhs(n, k, quarter) != quarter.count(2 * n + 2 * k, 0, n)) {
                    ok = false;
                    diag = "specialization n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        report(6, ok,
               "endpoint identity holds for 0 <= n <= 8, 1 <= k <= 4, all admissible r "
               "(m >= 2k-2), plus its r = n+k specialization",
               diag);
    }

    // 7. Double sum for F(n+2k; n, 0).
    {
        bool ok = true;
        std::string diag;
        for (int n = 0; n <= 10 && ok; ++n)
            for (int k = 1; k <= 4 && ok; ++k)
                if (theorem5_rhs(n, k, quarter) != quarter.count(n + 2 * k, n, 0)) {
                    ok = false;
                    diag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
        report(7, ok, "seed double sum equals DP F(n+2k;n,0) for 0 <= n <= 10, 1 <= k <= 4",
               diag);
    }

    // 8. The (0, n) endpoint family.
    {
        bool ok = true;
        std::string diag;
        for (int k = 0; k <= 3 && ok; ++k)
            for (int n = 0; n <= 10 && ok; ++n)
                if (c2_formula(n, k) != quarter.count(2 * n + 2 * k, 0, n)) {
                    ok = false;
                    diag = "displayed form n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
        for (int k = 1; k <= 4 && ok; ++k) {
            const PolynomialFinding f = c2_extract(k, quarter);
            const bool leading = f.normalized.leading() == rational_pow(Rational(2), 3 * k - 2);
            if (!(f.degree_ok && f.normalized.degree() == 2 * k - 2 && f.integrality_ok &&
                  leading && f.divisibility_ok)) {
                ok = false;
                diag = "extraction k=" + std::to_string(k);
            }
        }
        report(8, ok,
               "all four displayed (0,n) forms equal DP for n <= 10; extracted h_k has degree "
               "2k-2, integer coefficients, leading 2^(3k-2), and r_k vanishes at n = -1",
               diag);
    }

    // 9. Three-term recurrence for g(n) = F(2n+1;1,0).
    {
        bool ok = true;
        std::string diag;
        for (const auto& inst : c3_check(8, quarter))
            if (!inst.passed && ok) {
                ok = false;
                diag = "residual " + inst.lhs + " at n=" +
                       std::to_string(inst.params.empty() ? -1 : inst.params[0].second);
            }
        report(9, ok, "recurrence residual is 0 for 1 <= n <= 8", diag);
    }

    // 10. The (n, 0) endpoint family.
    {
        bool ok = true;
        std::string diag;
        for (int k = 0; k <= 3 && ok; ++k)
            for (int n = 0; n <= 10 && ok; ++n)
                if (c4_formula(n, k) != quarter.count(n + 2 * k, n, 0)) {
                    ok = false;
                    diag = "displayed form n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
        for (int k = 1; k <= 4 && ok; ++k) {
            const PolynomialFinding f = c4_extract(k, quarter);
            if (!(f.degree_ok && f.normalized.degree() == 2 * k - 1 && f.integrality_ok &&
                  f.normalized.leading() == 1 && f.divisibility_ok)) {
                ok = false;
                diag = "extraction k=" + std::to_string(k);
            }
        }
        report(10, ok,
               "all four displayed (n,0) forms equal DP for n <= 10; normalized h_k has degree "
               "2k-1, integer coefficients, leading 1",
               diag);
    }

    // 11. The (0, 1) endpoint closed form and the k = 1, 2 fits.
    {
        bool ok = true;
        std::string diag;
        for (int n = 1; n <= 10 && ok; ++n)
            if (c1_formula(n) != quarter.count(2 * n, 0, 1)) {
                ok = false;
                diag = "closed form at n=" + std::to_string(n);
            }
        for (int k = 1; k <= 2 && ok; ++k) {
            const C1Fit fit = c1_fit(k, 4 * k + 3, quarter);
            const bool degrees = fit.p.degree() <= 2 * k - 2 && fit.q.degree() <= 2 * k;
            if (!(degrees && fit.holdout_ok && fit.holdout.size() == 3)) {
                ok = false;
                diag = "fit k=" + std::to_string(k);
            }
        }
        report(11, ok,
               "closed form equals DP F(2n;0,1) for 1 <= n <= 10; k = 1, 2 fits have degrees "
               "<= 2k-2 / <= 2k and validate on 3 held-out points",
               diag);
    }

    // 12. Refined counts by number of equal-pair steps.
    {
        bool ok = true;
        std::string diag;
        for (int n = 1; n <= 5 && ok; ++n) {
            CountInt sum = 0;
            for (int k = 0; k <= n; ++k) sum += refined_count(n, k);
            if (sum != quarter.count(2 * n, 0, 0)) {
                ok = false;
                diag = "row sum at n=" + std::to_string(n);
                break;
            }
            const CountInt cat = catalan(n);
            if (refined_count(n, 0) != cat || refined_count(n, n) != cat) {
                ok = false;
                diag = "edge refinement at n=" + std::to_string(n);
                break;
            }
            const CountInt printed = fk_edge_formulas(n).f_n_minus_1;
            const CountInt enumerated = refined_count(n, n - 1);
            if (printed != enumerated) {
                ok = false;
                diag = "next-to-top refinement at n=" + std::to_string(n) +
                       ": printed closed form gives " + printed.str() + ", enumeration gives " +
                       enumerated.str() + " (the closed form reproduces the k=1 class instead)";
            }
        }
        report(12, ok,
               "row sums, Catalan edges, and the next-to-top closed form all agree for "
               "1 <= n <= 5",
               diag);
    }

    // 13. Sign-split totals, the printed first form surfaced, both alternatives checked.
    {
        bool ok = true;
        std::string diag;
        for (int n = 1; n <= 5 && ok; ++n) {
            const auto parts = split_counts(n);
            const SplitFormulas forms = p_split_formulas(n);
            const CountInt cat = catalan(n);
            if (parts[0] + parts[1] + parts[2] != quarter.count(2 * n, 0, 0)) {
                ok = false;
                diag = "split sum at n=" + std::to_string(n);
            } else if (forms.p2 != parts[1]) {
                ok = false;
                diag = "second form at n=" + std::to_string(n);
            } else if (parts[0] != cat * cat) {
                ok = false;
                diag = "alternative Catalan-square form at n=" + std::to_string(n);
            }
        }
        if (ok) {
            // The printed first form must be surfaced as a documented
            // discrepancy, not forced to pass: brute force gives P1(1) = 1
            // against the printed 2.
            if (split_counts(1)[0] != 1 || p_split_formulas(1).p1_printed != 2) {
                ok = false;
                diag = "expected P1(1) = 1 vs printed 2";
            } else {
                const SuiteResult s = run_suite("section4", SuiteLimits{});
                int surfaced = 0;
                for (const auto& inst : s.instances)
                    if (inst.identity_id == "eq20_printed" && !inst.passed && inst.allowlisted)
                        ++surfaced;
                if (surfaced == 0) {
                    ok = false;
                    diag = "report does not surface the printed-form discrepancy";
                }
            }
        }
        report(13, ok,
               "split totals and the second form check out for 1 <= n <= 5; the printed first "
               "form's discrepancy is surfaced in the report and the Catalan-square "
               "alternative passes",
               diag);
    }

    // 14. Diagonal-region totals: cross-sum and two-term recurrence.
    {
        bool ok = true;
        std::string diag;
        const CountInt first_terms[] = {1, 2, 7, 21};
        for (int m = 0; m <= 3 && ok; ++m)
            if (diagonal_total(diagonal, m) != first_terms[m]) {
                ok = false;
                diag = "sequence head at m=" + std::to_string(m);
            }
        for (int m = 0; m <= 14 && ok; ++m)
            if (quarter_layer_sum(quarter, m) != diagonal_total(diagonal, m)) {
                ok = false;
                diag = "layer cross-sum at m=" + std::to_string(m);
            }
        for (const auto& inst : a_recurrence_check(14, diagonal))
            if (!inst.passed && ok) {
                ok = false;
                diag = "recurrence step " + inst.identity_id;
            }
        report(14, ok, "diagonal totals match the layer double sum and the two-term recurrence "
                       "for m <= 14 (1, 2, 7, 21, ...)",
               diag);
    }

    // 15. Byte-identical reports across runs.
    {
        bool ok = false;
        std::string diag;
        if (argc < 2) {
            diag = "CLI binary path missing (argv[1])";
        } else {
            const std::string bin = argv[1];
            const std::string base = "/tmp/gessel_accept_" + std::to_string(getpid());
            const std::string a = base + "_a.json";
            const std::string b = base + "_b.json";
            const std::string cmd1 =
                "\"" + bin + "\" verify --suite all --format json --output " + a;
            const std::string cmd2 =
                "\"" + bin + "\" verify --suite all --format json --output " + b;
            const int s1 = std::system(cmd1.c_str());
            const int s2 = std::system(cmd2.c_str());
            const int e1 = WIFEXITED(s1) ? WEXITSTATUS(s1) : -1;
            const int e2 = WIFEXITED(s2) ? WEXITSTATUS(s2) : -1;
            if (e1 != 0 || e2 != 0) {
                diag = "verify exited " + std::to_string(e1) + " / " + std::to_string(e2);
            } else {
                const std::string da = slurp(a);
                const std::string db = slurp(b);
                if (da.empty())
                    diag = "empty report";
                else if (da != db)
                    diag = "reports differ";
                else
                    ok = true;
            }
            std::remove(a.c_str());
            std::remove(b.c_str());
        }
        report(15, ok, "two runs of verify --suite all --format json are byte-identical", diag);
    }

    if (g_failures > 0)
        std::cout << g_failures << " criterion(s) failed\n";
    else
        std::cout << "all 15 criteria passed\n";
    return g_failures == 0 ? 0 : 1;
}
