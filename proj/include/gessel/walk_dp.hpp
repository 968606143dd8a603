#pragma once

// Layer-by-layer dynamic programming for lattice walks with step set
// {W(-1,0), NE(1,1), E(1,0), SW(-1,-1)}, confined to one of three regions:
//
//   QuarterPlane   x >= 0 and y >= 0
//   HalfPlane      y >= 0
//   BelowDiagonal  x >= 0 and y <= x
//
// Layer m maps reachable endpoints to exact walk counts; points outside the
// region never enter a layer, and stored counts are always positive.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gessel/exact.hpp"

namespace gessel {

enum class Region { QuarterPlane, HalfPlane, BelowDiagonal };

const char* region_name(Region r);

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

inline constexpr Point kSteps[4] = {{-1, 0}, {1, 1}, {1, 0}, {-1, -1}};

bool admissible(Region r, Point p);

using Layer = std::map<Point, CountInt>;

// One DP transition: counts of (m+1)-step walks from counts of m-step walks.
Layer advance_layer(Region region, const Layer& prev);

struct WalkQuery {
    Region region = Region::QuarterPlane;
    int m = 0;
    int n1 = 0;
    int n2 = 0;
};

class DPTable {
public:
    DPTable(Region region, int m_max); // builds layers 0..m_max

    Region region() const { return region_; }
    int m_max() const { return static_cast<int>(layers_.size()) - 1; }
    const Layer& layer(int m) const; // QueryExceedsTable outside 0..m_max
    CountInt count(int m, int n1, int n2) const; // 0 for absent endpoints

private:
    Region region_;
    std::vector<Layer> layers_;
};

DPTable build_table(Region region, int m_max);

// Count for a query against a prebuilt table; RegionMismatch if the table
// was built for a different region, QueryExceedsTable if m is out of range.
CountInt count(const DPTable& table, const WalkQuery& q);

// Sum of layer m of the BelowDiagonal table (walks with free endpoint).
CountInt diagonal_total(const DPTable& table, int m);

// Single-layer walker for long sequences where storing every layer would
// be wasteful; holds only the current layer.
class RollingTable {
public:
    explicit RollingTable(Region region);
    Region region() const { return region_; }
    int steps() const { return steps_; }
    const Layer& layer() const { return layer_; }
    void advance();
    CountInt at(int n1, int n2) const;
    CountInt total() const;

private:
    Region region_;
    int steps_ = 0;
    Layer layer_;
};

} // namespace gessel
