#include "gessel/walk_dp.hpp"

namespace gessel {

const char* region_name(Region r) {
    switch (r) {
        case Region::QuarterPlane: return "quarter";
        case Region::HalfPlane: return "half";
        case Region::BelowDiagonal: return "diagonal";
    }
    return "?";
}

bool admissible(Region r, Point p) {
    switch (r) {
        case Region::QuarterPlane: return p.x >= 0 && p.y >= 0;
        case Region::HalfPlane: return p.y >= 0;
        case Region::BelowDiagonal: return p.x >= 0 && p.y <= p.x;
    }
    return false;
}

Layer advance_layer(Region region, const Layer& prev) {
    Layer next;
    for (const auto& [p, c] : prev) {
        for (Point s : kSteps) {
            Point q{p.x + s.x, p.y + s.y};
            if (admissible(region, q)) next[q] += c;
        }
    }
    return next;
}

DPTable::DPTable(Region region, int m_max) : region_(region) {
    if (m_max < 0) throw PreconditionViolation("DPTable: m_max must be nonnegative");
    layers_.reserve(static_cast<size_t>(m_max) + 1);
    layers_.push_back(Layer{{Point{0, 0}, CountInt(1)}});
    for (int m = 1; m <= m_max; ++m) layers_.push_back(advance_layer(region_, layers_.back()));
}

const Layer& DPTable::layer(int m) const {
    if (m < 0 || m > m_max())
        throw QueryExceedsTable("layer " + std::to_string(m) + " outside table range 0.." +
                                std::to_string(m_max()));
    return layers_[static_cast<size_t>(m)];
}

CountInt DPTable::count(int m, int n1, int n2) const {
    const Layer& l = layer(m);
    auto it = l.find(Point{n1, n2});
    return it == l.end() ? CountInt(0) : it->second;
}

DPTable build_table(Region region, int m_max) {
    return DPTable(region, m_max);
}

CountInt count(const DPTable& table, const WalkQuery& q) {
    if (q.region != table.region())
        throw RegionMismatch(std::string("query region ") + region_name(q.region) +
                             " against table for " + region_name(table.region()));
    if (q.m < 0) throw PreconditionViolation("count: negative step count");
    return table.count(q.m, q.n1, q.n2);
}

CountInt diagonal_total(const DPTable& table, int m) {
    if (table.region() != Region::BelowDiagonal)
        throw RegionMismatch(std::string("diagonal_total needs a diagonal table, got ") +
                             region_name(table.region()));
    CountInt total = 0;
    for (const auto& [p, c] : table.layer(m)) total += c;
    return total;
}

RollingTable::RollingTable(Region region) : region_(region) {
    layer_[Point{0, 0}] = 1;
}

void RollingTable::advance() {
    layer_ = advance_layer(region_, layer_);
    ++steps_;
}

CountInt RollingTable::at(int n1, int n2) const {
    auto it = layer_.find(Point{n1, n2});
    return it == layer_.end() ? CountInt(0) : it->second;
}

CountInt RollingTable::total() const {
    CountInt total = 0;
    for (const auto& [p, c] : layer_) total += c;
    return total;
}

} // namespace gessel
