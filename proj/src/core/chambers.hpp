#pragma once

#include "core/polygon.hpp"

#include <cstdint>
#include <string>

namespace tropogw {

struct Wall {
    enum class Kind { Mixed, Equalizer, Ordering } kind = Kind::Mixed;
    // Mixed: sum_{S} x + sum_{T} y + sum c_r_i k_i - sum c_l_j t_j.
    std::vector<int> S, T;
    IntVec k, t;
    // Equalizer: y_i - y_j.  Ordering: a consecutive slope difference.
    int i = -1, j = -1;
    // Normalized form in chart coordinates: sum coef_v v + constant.
    std::vector<Int> coef;
    Int constant = 0;

    std::string describe(const std::vector<std::string>& chart_names) const;
};

// The walls live in a chart of Lambda: the last x/y variable is eliminated
// with the relation sum lambda_v v + lambda0 = 0 (lambda = 1 on x and y).
class Arrangement {
public:
    std::vector<std::string> full_names;
    std::vector<Int> lambda;
    Int lambda0 = 0;
    int eliminated = -1;
    std::vector<Wall> walls;
    std::size_t raw_count = 0;  // candidate forms before merging (trivial form excluded)
    bool extended = false;

    std::vector<std::string> chart_names() const;
    IntVec to_chart(const IntVec& full) const;
    IntVec complete(const IntVec& chart) const;
    bool in_lambda(const IntVec& full) const;
    Int evaluate(const Wall& w, const IntVec& chart) const;

    // '+' / '-' per wall; throws OnWall when some wall vanishes.
    std::string signature(const IntVec& full) const;
    // Same but returns false instead of throwing.
    bool try_signature(const IntVec& full, std::string& out) const;

    // Adds a form given over the full variables; merged when equal to an
    // existing wall modulo Lambda and scaling.
    void add_form(const Wall& descriptor, const std::vector<Int>& full_coef, const Int& constant);
};

// Walls of the arrangement for fixed slopes; variables x_1..x_n1, y_1..y_n2.
Arrangement walls(const PolygonShape& shape, int n1, int n2);

// Slopes become variables c_r1.., c_l1..; forms are linear and the strict
// slope orderings are appended as Ordering walls.
Arrangement extended_walls(const PolygonShape& shape, int n1, int n2);

std::string chamber_signature(const PolygonShape& shape, const IntVec& x, const IntVec& y);

// Point layout (x, y, c_r, c_l).  Throws OrderingViolation when the slopes
// are not strictly ordered.
std::string extended_signature(const PolygonShape& shape, const IntVec& x, const IntVec& y);

// '+': v > 0, '0': -K < v < 0, '-': v < -K, one character per coordinate of
// (x1, x2, y1); empty unless n1 = 2, n2 = 1 and K > 0.
std::string named_label(const PolygonShape& shape, const IntVec& x, const IntVec& y);

// Distinct Lambda points (full coordinates) with the anchor's signature,
// anchor first.  Small boxes are scanned exhaustively, larger ones sampled
// with a seeded generator.
std::vector<IntVec> sample_chamber(const Arrangement& arr, const IntVec& anchor, std::size_t count,
                                   std::int64_t radius, std::uint64_t seed = 1);

}  // namespace tropogw
