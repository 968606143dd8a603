#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gessel/identities.hpp"
#include "gessel/path_oracle.hpp"

namespace gessel {

namespace {

struct SuiteDef {
    const char* id;
    int def_n;
    int def_k;
};

// Canonical order; "all" expands to this.
constexpr SuiteDef kSuiteDefs[] = {
    {"lemmas", 12, 0},   {"theorem3", 8, 4}, {"theorem5", 10, 4}, {"c1", 10, 2},
    {"c2", 10, 4},       {"c3", 8, 0},       {"c4", 10, 4},       {"section4", 5, 0},
};

// Fixed sweep ranges pinned independently of --n-max (see README).
constexpr int kClosedFormNMax = 12;   // eq4 sweep
constexpr int kDiagonalMMax = 14;     // eq24 / eq25 sweeps
constexpr int kDefaultOracleCap = 12; // enumeration sweeps, hard cap kOracleCap

struct Resolved {
    int n_max = 0;
    int k_max = 0;
    int oracle_cap = kDefaultOracleCap;
};

struct Needs {
    int quarter = -1;
    int half = -1;
    int diagonal = -1;

    void merge(const Needs& o) {
        quarter = std::max(quarter, o.quarter);
        half = std::max(half, o.half);
        diagonal = std::max(diagonal, o.diagonal);
    }
};

const SuiteDef& suite_def(const std::string& id) {
    for (const auto& d : kSuiteDefs)
        if (id == d.id) return d;
    throw UnknownSuite("unknown suite '" + id + "'");
}

Resolved resolve(const SuiteDef& def, const SuiteLimits& limits) {
    Resolved r;
    r.n_max = limits.n_max.value_or(def.def_n);
    r.k_max = limits.k_max.value_or(def.def_k);
    r.oracle_cap = std::min(limits.oracle_cap.value_or(kDefaultOracleCap), kOracleCap);
    if (r.n_max < 0 || r.k_max < 0 || r.oracle_cap < 0)
        throw PreconditionViolation("suite limits must be nonnegative");
    return r;
}

// Largest refined/split sweep value: enumeration length is 2n.
int refined_n_limit(const Resolved& r) {
    return std::min({r.n_max, kOracleCap / 2, r.oracle_cap / 2});
}

Needs suite_needs(const std::string& id, const Resolved& r) {
    Needs n;
    if (id == "lemmas") {
        n.quarter = std::max(r.n_max, r.oracle_cap);
        n.half = std::max(r.n_max, r.oracle_cap);
    } else if (id == "theorem3") {
        n.quarter = 2 * (r.n_max + r.k_max);
    } else if (id == "theorem5") {
        n.quarter = r.n_max + 2 * r.k_max;
    } else if (id == "c1") {
        // eq5.1 needs 2n; the k fit samples n = k .. 5k+2.
        n.quarter = std::max(2 * r.n_max, 2 * (5 * r.k_max + 2));
    } else if (id == "c2") {
        n.quarter = std::max(2 * r.n_max + 6, 6 * r.k_max + 8);
    } else if (id == "c3") {
        n.quarter = 2 * r.n_max + 3;
    } else if (id == "c4") {
        n.quarter = std::max(r.n_max + 6, 4 * r.k_max + 4);
    } else if (id == "section4") {
        n.quarter = std::max({2 * kClosedFormNMax, kDiagonalMMax, 2 * refined_n_limit(r)});
        n.diagonal = kDiagonalMMax;
    }
    return n;
}

IdentityInstance layer_compare(std::string id, int m, const std::map<Point, CountInt>& oracle,
                               const Layer& dp) {
    IdentityInstance inst;
    inst.identity_id = std::move(id);
    inst.params = {{"m", m}};
    if (oracle == dp) {
        CountInt total = 0;
        for (const auto& [p, c] : dp) total += c;
        inst.lhs = total.str();
        inst.rhs = inst.lhs;
        inst.passed = true;
        return inst;
    }
    inst.passed = false;
    // Report the first point whose counts disagree (missing entries are 0).
    auto lo = oracle.begin();
    auto ld = dp.begin();
    Point where{};
    CountInt ov = 0, dv = 0;
    while (lo != oracle.end() || ld != dp.end()) {
        if (ld == dp.end() || (lo != oracle.end() && lo->first < ld->first)) {
            where = lo->first;
            ov = lo->second;
            dv = 0;
        } else if (lo == oracle.end() || ld->first < lo->first) {
            where = ld->first;
            ov = 0;
            dv = ld->second;
        } else {
            if (lo->second != ld->second) {
                where = lo->first;
                ov = lo->second;
                dv = ld->second;
            } else {
                ++lo;
                ++ld;
                continue;
            }
        }
        break;
    }
    inst.lhs = ov.str();
    inst.rhs = dv.str();
    inst.note = "first mismatch at (" + std::to_string(where.x) + ", " + std::to_string(where.y) + ")";
    return inst;
}

SuiteResult run_lemmas(const Resolved& r, const DPTable& quarter, const DPTable& half) {
    SuiteResult s{"lemmas", {}};
    for (int m = 0; m <= r.oracle_cap; ++m) {
        s.instances.push_back(
            layer_compare("oracle_quarter_layer", m, quarter_surface(m), quarter.layer(m)));
        s.instances.push_back(
            layer_compare("oracle_half_layer", m, half_surface(m), half.layer(m)));
    }
    for (int n1 = 0; n1 <= r.n_max; ++n1)
        for (int n2 = 0; n2 <= n1; ++n2)
            s.instances.push_back(make_instance("eq9", {{"n1", n1}, {"n2", n2}},
                                                boundary_formula(n1, n1, n2),
                                                quarter.count(n1, n1, n2)));
    for (int n2 = 0; n2 <= r.n_max; ++n2)
        for (int n1 = 0; n1 <= n2; ++n1) {
            const int m = 2 * n2 - n1;
            if (m > r.n_max) continue;
            s.instances.push_back(make_instance("eq10", {{"n1", n1}, {"n2", n2}},
                                                boundary_formula(m, n1, n2),
                                                quarter.count(m, n1, n2)));
        }
    // Sweep just past the support in n2 so the zero agreement is covered too.
    for (int m = 0; m <= r.n_max; ++m)
        for (int n1 = -m; n1 <= m; n1 += 2)
            for (int n2 = 0; n2 <= (m + n1) / 2 + 2; ++n2)
                s.instances.push_back(make_instance("eq16", {{"m", m}, {"n1", n1}, {"n2", n2}},
                                                    half_plane_formula(m, n1, n2),
                                                    half.count(m, n1, n2)));
    return s;
}

SuiteResult run_theorem3(const Resolved& r, const DPTable& quarter) {
    SuiteResult s{"theorem3", {}};
    for (int n = 0; n <= r.n_max; ++n) {
        for (int k = 1; k <= r.k_max; ++k) {
            bool agree = true;
            int bad_r = 0;
            CountInt form1_at_bad = 0, form2_at_bad = 0, total = 0;
            for (int rr = -n; rr <= n + k; ++rr) {
                const CountInt lhs = theorem3_rhs(n, k, rr, quarter);
                const CountInt alt = theorem3_rhs_alt(n, k, rr, quarter);
                auto inst = make_instance("eq17", {{"n", n}, {"k", k}, {"r", rr}}, lhs,
                                          quarter.count(n + k + rr, n + k - rr, n));
                // The decomposition behind the identity needs the walk to be at
                // least as long as its length-(2k-2) seed; shorter walks fall
                // outside the stated hypothesis' reach.
                if (n + k + rr < 2 * k - 2) {
                    inst.allowlisted = true;
                    if (!inst.passed)
                        inst.note = "walk shorter than seed (m < 2k-2); identity out of domain";
                }
                s.instances.push_back(std::move(inst));
                if (agree && alt != lhs) {
                    agree = false;
                    bad_r = rr;
                    form1_at_bad = lhs;
                    form2_at_bad = alt;
                }
                total += lhs;
            }
            IdentityInstance forms;
            forms.identity_id = "eq17_form_agreement";
            forms.params = {{"n", n}, {"k", k}};
            forms.passed = agree;
            if (agree) {
                forms.lhs = total.str();
                forms.rhs = total.str();
            } else {
                forms.lhs = form2_at_bad.str();
                forms.rhs = form1_at_bad.str();
                forms.note = "forms diverge at r = " + std::to_string(bad_r);
            }
            s.instances.push_back(std::move(forms));
            s.instances.push_back(make_instance("eq19", {{"n", n}, {"k", k}},
                                                eq19_rhs(n, k, quarter),
                                                quarter.count(2 * n + 2 * k, 0, n)));
        }
    }
    return s;
}

SuiteResult run_theorem5(const Resolved& r, const DPTable& quarter) {
    SuiteResult s{"theorem5", {}};
    for (int n = 0; n <= r.n_max; ++n)
        for (int k = 1; k <= r.k_max; ++k)
            s.instances.push_back(make_instance("eq18", {{"n", n}, {"k", k}},
                                                theorem5_rhs(n, k, quarter),
                                                quarter.count(n + 2 * k, n, 0)));
    return s;
}

std::string fit_flags(bool degree_ok, bool holdout_ok) {
    std::ostringstream os;
    os << "degree=" << (degree_ok ? "ok" : "bad") << ",holdout=" << (holdout_ok ? "ok" : "bad");
    return os.str();
}

SuiteResult run_c1(const Resolved& r, const DPTable& quarter) {
    SuiteResult s{"c1", {}};
    for (int n = 1; n <= r.n_max; ++n)
        s.instances.push_back(
            make_instance("eq5.1", {{"n", n}}, c1_formula(n), quarter.count(2 * n, 0, 1)));
    for (int k = 1; k <= r.k_max; ++k) {
        C1Fit fit = c1_fit(k, 4 * k + 3, quarter);
        IdentityInstance inst;
        inst.identity_id = "c1_fit";
        inst.params = {{"k", k}};
        inst.lhs = fit_flags(fit.degree_ok, fit.holdout_ok);
        inst.rhs = fit_flags(true, true);
        inst.passed = fit.degree_ok && fit.holdout_ok;
        inst.note = "p(n) = " + fit.p.str() + "; q(n) = " + fit.q.str();
        s.instances.push_back(std::move(inst));
        for (auto& h : fit.holdout) s.instances.push_back(std::move(h));
    }
    return s;
}

std::string extract_flags(const PolynomialFinding& f) {
    std::ostringstream os;
    os << "degree=" << (f.degree_ok ? "ok" : "bad")
       << ",integer=" << (f.integrality_ok ? "ok" : "bad")
       << ",leading=" << (f.leading_ok ? "ok" : "bad")
       << ",divisible=" << (f.divisibility_ok ? "ok" : "bad");
    return os.str();
}

IdentityInstance extract_instance(const char* id, const PolynomialFinding& f) {
    IdentityInstance inst;
    inst.identity_id = id;
    inst.params = {{"k", f.k}};
    inst.lhs = extract_flags(f);
    PolynomialFinding expected;
    expected.degree_ok = expected.integrality_ok = expected.leading_ok =
        expected.divisibility_ok = true;
    inst.rhs = extract_flags(expected);
    inst.passed = f.all_ok();
    inst.note = f.family + "_" + std::to_string(f.k) + "(n) = " + f.poly.str();
    return inst;
}

SuiteResult run_c2(const Resolved& r, const DPTable& quarter) {
    SuiteResult s{"c2", {}};
    for (int k = 0; k <= std::min(3, r.k_max); ++k)
        for (int n = 0; n <= r.n_max; ++n)
            s.instances.push_back(make_instance("eq6.1", {{"k", k}, {"n", n}}, c2_formula(n, k),
                                                quarter.count(2 * n + 2 * k, 0, n)));
    for (int k = 1; k <= r.k_max; ++k)
        s.instances.push_back(extract_instance("c2_extract", c2_extract(k, quarter)));
    return s;
}

SuiteResult run_c3(const Resolved& r, const DPTable& quarter) {
    return SuiteResult{"c3", c3_check(r.n_max, quarter)};
}

SuiteResult run_c4(const Resolved& r, const DPTable& quarter) {
    SuiteResult s{"c4", {}};
    for (int k = 0; k <= std::min(3, r.k_max); ++k)
        for (int n = 0; n <= r.n_max; ++n)
            s.instances.push_back(make_instance("eq8.1", {{"k", k}, {"n", n}}, c4_formula(n, k),
                                                quarter.count(n + 2 * k, n, 0)));
    for (int k = 1; k <= r.k_max; ++k)
        s.instances.push_back(extract_instance("c4_extract", c4_extract(k, quarter)));
    return s;
}

SuiteResult run_section4(const Resolved& r, const DPTable& quarter, const DPTable& diagonal) {
    SuiteResult s{"section4", {}};
    for (int n = 0; n <= kClosedFormNMax; ++n)
        s.instances.push_back(
            make_instance("eq4", {{"n", n}}, gessel_closed_form(n), quarter.count(2 * n, 0, 0)));

    const int n_ref = refined_n_limit(r);
    for (int n = 1; n <= n_ref; ++n) {
        std::vector<CountInt> fk(static_cast<size_t>(n) + 1);
        CountInt sum = 0;
        for (int k = 0; k <= n; ++k) {
            fk[static_cast<size_t>(k)] = refined_count(n, k);
            sum += fk[static_cast<size_t>(k)];
        }
        const EdgeRefinements edge = fk_edge_formulas(n);
        s.instances.push_back(
            make_instance("fk_sum", {{"n", n}}, sum, quarter.count(2 * n, 0, 0)));
        s.instances.push_back(make_instance("fk_catalan_f0", {{"n", n}}, edge.f0, fk[0]));
        auto edge23 = make_instance("eq23", {{"n", n}}, edge.f_n_minus_1,
                                    fk[static_cast<size_t>(n) - 1]);
        edge23.allowlisted = true;
        if (!edge23.passed)
            edge23.note = "verified as printed; enumeration disagrees (formula gives the k=1 refinement)";
        s.instances.push_back(std::move(edge23));
        s.instances.push_back(make_instance("fk_catalan_fn", {{"n", n}}, edge.f_n,
                                            fk[static_cast<size_t>(n)]));

        const auto split = split_counts(n);
        const SplitFormulas forms = p_split_formulas(n);
        s.instances.push_back(make_instance("p_split_sum", {{"n", n}},
                                            split[0] + split[1] + split[2],
                                            quarter.count(2 * n, 0, 0)));
        auto printed = make_instance("eq20_printed", {{"n", n}}, forms.p1_printed, split[0]);
        printed.allowlisted = true;
        if (!printed.passed) printed.note = "verified as printed; enumeration disagrees";
        s.instances.push_back(std::move(printed));
        const CountInt cat = catalan(n);
        s.instances.push_back(make_instance("eq20_catalan_sq", {{"n", n}}, cat * cat, split[0]));
        s.instances.push_back(make_instance("eq21", {{"n", n}}, forms.p2, split[1]));
    }

    for (auto& inst : a_recurrence_check(kDiagonalMMax, diagonal)) s.instances.push_back(std::move(inst));
    for (int m = 0; m <= kDiagonalMMax; ++m)
        s.instances.push_back(make_instance("eq25", {{"m", m}}, quarter_layer_sum(quarter, m),
                                            diagonal_total(diagonal, m)));
    return s;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& d : kSuiteDefs) v.emplace_back(d.id);
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& suite_id, const SuiteLimits& limits) {
    return run_suites({suite_id}, limits).front();
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& suite_ids,
                                    const SuiteLimits& limits) {
    std::vector<std::string> ids;
    for (const auto& id : suite_ids) {
        if (id == "all") {
            for (const auto& d : kSuiteDefs) ids.emplace_back(d.id);
        } else {
            suite_def(id); // validates
            ids.push_back(id);
        }
    }
    // Keep first occurrence of each suite, preserving request order.
    std::vector<std::string> unique;
    for (const auto& id : ids)
        if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);

    Needs needs;
    for (const auto& id : unique) needs.merge(suite_needs(id, resolve(suite_def(id), limits)));
    if (limits.m_cap) {
        const int cap = *limits.m_cap;
        auto check = [&](int need, const char* table) {
            if (need > cap)
                throw PreconditionViolation(std::string("requested suites need a ") + table +
                                            " table of length " + std::to_string(need) +
                                            ", above the configured limit " + std::to_string(cap));
        };
        check(needs.quarter, "quarter-plane");
        check(needs.half, "half-plane");
        check(needs.diagonal, "diagonal-region");
    }

    std::optional<DPTable> quarter, half, diagonal;
    if (needs.quarter >= 0) quarter.emplace(Region::QuarterPlane, needs.quarter);
    if (needs.half >= 0) half.emplace(Region::HalfPlane, needs.half);
    if (needs.diagonal >= 0) diagonal.emplace(Region::BelowDiagonal, needs.diagonal);

    std::vector<SuiteResult> results;
    for (const auto& id : unique) {
        const Resolved r = resolve(suite_def(id), limits);
        if (id == "lemmas")
            results.push_back(run_lemmas(r, *quarter, *half));
        else if (id == "theorem3")
            results.push_back(run_theorem3(r, *quarter));
        else if (id == "theorem5")
            results.push_back(run_theorem5(r, *quarter));
        else if (id == "c1")
            results.push_back(run_c1(r, *quarter));
        else if (id == "c2")
            results.push_back(run_c2(r, *quarter));
        else if (id == "c3")
            results.push_back(run_c3(r, *quarter));
        else if (id == "c4")
            results.push_back(run_c4(r, *quarter));
        else
            results.push_back(run_section4(r, *quarter, *diagonal));
    }
    return results;
}

} // namespace gessel
