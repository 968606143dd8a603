#include "gessel/path_oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace gessel {

namespace {

void check_length(int m) {
    if (m < 0) throw PreconditionViolation("oracle: negative path length");
    if (m > kOracleCap)
        throw SizeCap("oracle: length " + std::to_string(m) + " exceeds enumeration cap " +
                      std::to_string(kOracleCap));
}

// Counts fit in uint64_t with room to spare: at most 4^13 paths total.
struct PairDfs {
    int m;
    int target_s;
    int target_t;
    bool s_nonneg;
    bool s_ge_t;
    bool t_nonpos;
    bool t_nonneg;
    bool t_mixed;
    std::uint64_t hits = 0;

    void run(int j, int s, int t, bool seen_pos, bool seen_neg) {
        if (j == m) {
            if (s == target_s && t == target_t && (!t_mixed || (seen_pos && seen_neg))) ++hits;
            return;
        }
        const int rem = m - j - 1;
        for (int xi = -1; xi <= 1; xi += 2) {
            for (int eta = -1; eta <= 1; eta += 2) {
                const int s2 = s + xi;
                const int t2 = t + eta;
                if (s_nonneg && s2 < 0) continue;
                if (s_ge_t && s2 < t2) continue;
                if (t_nonpos && t2 > 0) continue;
                if (t_nonneg && t2 < 0) continue;
                if (std::abs(target_s - s2) > rem) continue;
                if (std::abs(target_t - t2) > rem) continue;
                run(j + 1, s2, t2, seen_pos || t2 > 0, seen_neg || t2 < 0);
            }
        }
    }
};

} // namespace

CountInt count_pair_paths(const PairPathConstraint& c) {
    check_length(c.length);
    if (int(c.require_t_nonpos) + int(c.require_t_nonneg) + int(c.require_t_mixed) > 1)
        throw PreconditionViolation("count_pair_paths: conflicting T-sign constraints");
    // Each step moves S and T by exactly +-1, so parity pins reachability.
    if ((c.endpoint_s + c.length) % 2 != 0) return 0;
    if ((c.endpoint_t + c.length) % 2 != 0) return 0;
    PairDfs dfs{c.length,          c.endpoint_s,      c.endpoint_t,
                c.require_s_nonneg, c.require_s_ge_t, c.require_t_nonpos,
                c.require_t_nonneg, c.require_t_mixed};
    dfs.run(0, 0, 0, false, false);
    return CountInt(dfs.hits);
}

CountInt brute_force_F(int m, int n1, int n2) {
    PairPathConstraint c;
    c.length = m;
    c.endpoint_s = n1;
    c.endpoint_t = n1 - 2 * n2;
    c.require_s_nonneg = true;
    c.require_s_ge_t = true;
    return count_pair_paths(c);
}

CountInt brute_force_G(int m, int n1, int n2) {
    PairPathConstraint c;
    c.length = m;
    c.endpoint_s = n1;
    c.endpoint_t = n1 - 2 * n2;
    c.require_s_ge_t = true;
    return count_pair_paths(c);
}

namespace {

// Closed quarter-plane pair paths of length 2n with an exact quota of
// xi == eta steps. equal_left counts how many are still needed.
void refined_dfs(int rem, int s, int t, int equal_left, std::uint64_t& hits) {
    if (rem == 0) {
        if (s == 0 && t == 0 && equal_left == 0) ++hits;
        return;
    }
    for (int xi = -1; xi <= 1; xi += 2) {
        for (int eta = -1; eta <= 1; eta += 2) {
            const int s2 = s + xi;
            const int t2 = t + eta;
            if (s2 < 0 || s2 < t2) continue;
            if (std::abs(s2) > rem - 1 || std::abs(t2) > rem - 1) continue;
            const int eq = equal_left - (xi == eta ? 1 : 0);
            if (eq < 0 || eq > rem - 1) continue;
            refined_dfs(rem - 1, s2, t2, eq, hits);
        }
    }
}

void split_dfs(int rem, int s, int t, bool seen_pos, bool seen_neg, std::uint64_t out[3]) {
    if (rem == 0) {
        if (s != 0 || t != 0) return;
        if (!seen_pos)
            ++out[0];
        else if (!seen_neg)
            ++out[1];
        else
            ++out[2];
        return;
    }
    for (int xi = -1; xi <= 1; xi += 2) {
        for (int eta = -1; eta <= 1; eta += 2) {
            const int s2 = s + xi;
            const int t2 = t + eta;
            if (s2 < 0 || s2 < t2) continue;
            if (std::abs(s2) > rem - 1 || std::abs(t2) > rem - 1) continue;
            split_dfs(rem - 1, s2, t2, seen_pos || t2 > 0, seen_neg || t2 < 0, out);
        }
    }
}

void surface_dfs(int rem, int s, int t, bool quarter, std::map<Point, std::uint64_t>& tally) {
    if (rem == 0) {
        // S - T is even along every path, so the walk ordinate is integral.
        ++tally[Point{s, (s - t) / 2}];
        return;
    }
    for (int xi = -1; xi <= 1; xi += 2) {
        for (int eta = -1; eta <= 1; eta += 2) {
            const int s2 = s + xi;
            const int t2 = t + eta;
            if (quarter && s2 < 0) continue;
            if (s2 < t2) continue;
            surface_dfs(rem - 1, s2, t2, quarter, tally);
        }
    }
}

std::map<Point, CountInt> surface(int m, bool quarter) {
    check_length(m);
    std::map<Point, std::uint64_t> tally;
    surface_dfs(m, 0, 0, quarter, tally);
    std::map<Point, CountInt> out;
    for (const auto& [p, c] : tally) out[p] = CountInt(c);
    return out;
}

} // namespace

CountInt refined_count(int n, int k) {
    if (n < 0) throw PreconditionViolation("refined_count: negative n");
    check_length(2 * n);
    if (k < 0 || k > n) return 0;
    std::uint64_t hits = 0;
    refined_dfs(2 * n, 0, 0, 2 * k, hits);
    return CountInt(hits);
}

std::array<CountInt, 3> split_counts(int n) {
    if (n < 0) throw PreconditionViolation("split_counts: negative n");
    check_length(2 * n);
    if (n == 0) return {CountInt(0), CountInt(1), CountInt(0)};
    std::uint64_t out[3] = {0, 0, 0};
    split_dfs(2 * n, 0, 0, false, false, out);
    return {CountInt(out[0]), CountInt(out[1]), CountInt(out[2])};
}

std::map<Point, CountInt> quarter_surface(int m) {
    return surface(m, true);
}

std::map<Point, CountInt> half_surface(int m) {
    return surface(m, false);
}

} // namespace gessel
