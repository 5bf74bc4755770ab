#include "core/examples.hpp"

#include "core/chambers.hpp"
#include "core/polynomials.hpp"

#include <cstdlib>

namespace tropogw {

PolygonShape two_floor_shape(std::int64_t k) { return PolygonShape{{k, 0}, {0}, {1, 1}, {2}}; }

namespace {

// Compact row notation: tokens "x1", "x1-k", "0", ... optionally prefixed by
// "G*" for the (g + 3) coefficient.
ChamberExpansion parse_row(const std::string& label, const std::vector<std::string>& tokens) {
    ChamberExpansion row{label, {}};
    for (std::string t : tokens) {
        GammaTerm term;
        if (t.rfind("G*", 0) == 0) {
            term.g_factor = true;
            t = t.substr(2);
        }
        if (t.size() > 2 && t.substr(t.size() - 2) == "-k") {
            term.minus_k = true;
            t = t.substr(0, t.size() - 2);
        }
        term.variable = t == "x1" ? 0 : t == "x2" ? 1 : t == "y1" ? 2 : -1;
        row.terms.push_back(term);
    }
    return row;
}

}  // namespace

const std::vector<ChamberExpansion>& reference_table() {
    static const std::vector<ChamberExpansion> rows = {
        parse_row("++-", {"y1-k", "y1", "x1", "x1-k", "x2", "x2-k"}),
        parse_row("+0-", {"x1", "x1-k", "G*x2-k", "y1-k", "y1", "x2", "0"}),
        parse_row("+--", {"x1", "x1-k", "G*x2-k", "G*x2", "y1-k", "y1", "0"}),
        parse_row("00-", {"x1", "x2", "0", "y1-k", "y1", "G*x2-k", "G*x1-k"}),
        parse_row("+-0", {"x1", "x1-k", "G*x2-k", "G*x2", "y1-k", "0", "G*y1"}),
        parse_row("0-0", {"x1", "0", "G*y1", "y1-k", "G*x2-k", "G*x1-k", "G*x2"}),
        parse_row("000", {"x1", "x2", "0", "G*y1", "y1-k", "G*0", "y1", "y1-k"}),
        parse_row("+-+", {"G*x1", "G*x1-k", "x2-k", "x2", "G*0", "y1", "y1-k"}),
        parse_row("0-+", {"G*x1", "G*0", "y1", "y1-k", "x2", "x2-k", "x1-k"}),
        parse_row("--+", {"G*0", "y1", "y1-k", "x2", "x2-k", "x1", "x1-k"}),
    };
    return rows;
}

const std::vector<ChamberExpansion>& corrected_expansions() {
    static const std::vector<ChamberExpansion> rows = {
        parse_row("++-", {"0", "x1", "x2", "x1-k", "x2-k", "y1", "y1-k"}),
        parse_row("+00", {"0", "x1", "x2", "x1-k", "G*x2-k", "G*y1", "y1-k"}),
        parse_row("00+", {"G*0", "G*x1", "G*x2", "x1-k", "x2-k", "y1", "y1-k"}),
        parse_row("000", {"0", "x1", "x2", "G*x1-k", "G*x2-k", "G*y1", "y1-k"}),
    };
    return rows;
}

Int expansion_value(const ChamberExpansion& row, int g, std::int64_t k, const IntVec& point) {
    Int sum = 0;
    for (const auto& t : row.terms) {
        std::int64_t w = t.variable < 0 ? 0 : point[t.variable];
        if (t.minus_k) w -= k;
        Int term = gamma_shifted(g, k, w);
        if (t.g_factor) term *= g + 3;
        sum += term;
    }
    return sum * std::abs(point[2]);
}

std::optional<IntVec> chamber_representative(std::int64_t k, const std::string& label, std::int64_t box) {
    const auto shape = two_floor_shape(k);
    for (std::int64_t r = 0; r <= box; ++r)
        for (std::int64_t x1 = -r; x1 <= r; ++x1)
            for (std::int64_t x2 = -r; x2 <= r; ++x2) {
                if (std::max(std::abs(x1), std::abs(x2)) != r) continue;
                IntVec x{x1, x2}, y{-k - x1 - x2};
                if (named_label(shape, x, y) == label) return IntVec{x1, x2, y[0]};
            }
    return std::nullopt;
}

WorkedInstance sixty_four_instance() {
    return WorkedInstance{build_polygon({2}, {-1, 0}, {2}, {1, 1}, 1), 0, DivergenceData{{1, -5}, {-1}}};
}

Polygon hirzebruch_polygon() { return build_polygon({2}, {0}, {1}, {1}, 1); }

Polygon four_floor_polygon() { return build_polygon({3, 1, -3}, {-1, 0}, {1, 2, 1}, {2, 2}, 2); }

}  // namespace tropogw
