#pragma once

#include "core/polygon.hpp"
#include "core/tangency.hpp"

#include <optional>
#include <string>

namespace tropogw {

// Two-black configuration with slopes (k, 0; 0) and lengths (1, 1; 2): the
// divergence space is x1 + x2 + y1 + k = 0 and the six walls are x_i = 0,
// x_i + k = 0, y1 = 0, y1 + k = 0.
PolygonShape two_floor_shape(std::int64_t k);

// One term c * Gamma(v - s) with Gamma(w) = Gamma_g(|w + k|).
struct GammaTerm {
    bool g_factor = false;  // coefficient g + 3 instead of 1
    int variable = -1;      // 0: x1, 1: x2, 2: y1, -1: the constant 0
    bool minus_k = false;
};

struct ChamberExpansion {
    std::string label;
    std::vector<GammaTerm> terms;
};

// The ten rows of the reference table, transcribed literally.
const std::vector<ChamberExpansion>& reference_table();

// Expansions confirmed by direct enumeration where they differ from the
// table or cover chambers it omits.
const std::vector<ChamberExpansion>& corrected_expansions();

// |y1| * sum of the terms at (x1, x2, y1).
Int expansion_value(const ChamberExpansion& row, int g, std::int64_t k, const IntVec& point);

// Lattice point of Lambda with the given named label, chosen deterministically
// (smallest max-norm first); empty when the chamber has no lattice point
// within the search box.
std::optional<IntVec> chamber_representative(std::int64_t k, const std::string& label, std::int64_t box = 12);

struct WorkedInstance {
    Polygon polygon;
    int g = 0;
    DivergenceData data;
};

// Polygon with c = (2; -1, 0), d_t = 1, d_r = 2, d_l = (1, 1) and the
// tangency data alpha_5 = beta_1 = alpha_tilde_1 = 1 in genus 0.
WorkedInstance sixty_four_instance();

Polygon hirzebruch_polygon();    // c = (2; 0), d = (1; 1; 1)
Polygon four_floor_polygon();    // c = (3, 1, -3; -1, 0), d = (2; 1, 2, 1; 2, 2)

}  // namespace tropogw
