#pragma once

#include "core/common.hpp"

#include <utility>

namespace tropogw {

// Slope and length data of an h-transverse polygon.  The right side has
// slopes c_r (strictly decreasing) with lattice lengths d_r, the left side
// has c_l (strictly increasing) with lengths d_l.  The bottom length d_b is
// always derived from balancing.
struct PolygonShape {
    IntVec c_r, c_l, d_r, d_l;

    // K = sum c_r d_r - sum c_l d_l; tangency data lives on sum x + sum y + K = 0.
    std::int64_t lambda_constant() const;
    std::int64_t height() const;  // a
    void validate() const;
};

struct Polygon {
    PolygonShape shape;
    std::int64_t d_t = 0;
    std::int64_t d_b = 0;
    std::int64_t a = 0;

    const IntVec& c_r() const { return shape.c_r; }
    const IntVec& c_l() const { return shape.c_l; }
    const IntVec& d_r() const { return shape.d_r; }
    const IntVec& d_l() const { return shape.d_l; }
};

Polygon build_polygon(const IntVec& c_r, const IntVec& c_l, const IntVec& d_r,
                      const IntVec& d_l, std::int64_t d_t);

// D_r and D_l: each slope repeated by its length, in the order given.
std::pair<IntVec, IntVec> boundary_multisets(const PolygonShape& shape);

// Distinct (r, l) pairs of arrangements of D_r and D_l.
std::vector<std::pair<IntVec, IntVec>> boundary_arrangements(const PolygonShape& shape);

}  // namespace tropogw
