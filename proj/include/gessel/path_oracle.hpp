#pragma once

// Independent brute-force oracle. Instead of the walk DP, these counters
// enumerate sequences of +-1 step pairs (xi_j, eta_j): with partial sums
// S_j = xi_1+...+xi_j and T_j = eta_1+...+eta_j, the lattice walk with step
// set {W, NE, E, SW} corresponds pair-for-pair via
//
//   position after j steps = (S_j, (S_j - T_j) / 2).
//
// Quarter-plane confinement becomes "S_j >= 0 and S_j >= T_j for all j";
// half-plane confinement becomes "S_j >= T_j for all j". Everything here is
// exhaustive depth-first search with prefix pruning, so results are immune
// to any bug in the DP transition and serve as ground truth for small sizes.

#include <array>
#include <map>

#include "gessel/exact.hpp"
#include "gessel/walk_dp.hpp"

namespace gessel {

// Enumeration is 4^m paths before pruning; refuse anything bigger than this.
inline constexpr int kOracleCap = 13;

struct PairPathConstraint {
    int length = 0;
    int endpoint_s = 0;
    int endpoint_t = 0;
    bool require_s_nonneg = false;   // S_j >= 0 for all j
    bool require_s_ge_t = false;     // S_j >= T_j for all j
    bool require_t_nonpos = false;   // T_j <= 0 for all j
    bool require_t_nonneg = false;   // T_j >= 0 for all j
    bool require_t_mixed = false;    // some T_j > 0 and some T_j < 0
};

// Number of pair-path sequences satisfying the constraint. SizeCap if
// length exceeds kOracleCap; at most one of the three T-sign flags may be set.
CountInt count_pair_paths(const PairPathConstraint& c);

// Quarter-plane walks of length m from the origin to (n1, n2).
CountInt brute_force_F(int m, int n1, int n2);

// Half-plane walks of length m from the origin to (n1, n2).
CountInt brute_force_G(int m, int n1, int n2);

// Closed quarter-plane walks of length 2n in which exactly 2k of the 2n
// pair steps have xi_j == eta_j. Pre: 2n <= kOracleCap; k outside 0..n
// yields 0 (no path can meet the quota).
CountInt refined_count(int n, int k);

// Closed quarter-plane walks of length 2n partitioned by the sign history
// of T: (all T_j <= 0, all T_j >= 0, mixed signs). The trivial walk of
// length 0 is counted in the middle class, so split_counts(0) = (0, 1, 0).
std::array<CountInt, 3> split_counts(int n);

// Endpoint tallies over every admissible walk of length m, keyed by walk
// coordinates (n1, n2); for comparing whole layers against the DP.
std::map<Point, CountInt> quarter_surface(int m);
std::map<Point, CountInt> half_surface(int m);

} // namespace gessel
