#pragma once

#include "core/fock.hpp"
#include "core/polygon.hpp"

namespace tropogw {

struct MatrixElementResult {
    Rat value = 0;            // prefactor times the extracted u coefficient
    Laurent raw;              // full u expansion of the shuffle sum
    int u_power = 0;          // extracted power g - 1 + len(x-) + len(y-)
    std::int64_t energy_cap = 0;
};

// Truncation that no contraction of a left-to-right diagram can exceed.
std::int64_t safe_energy_cap(const PolygonShape& shape, const IntVec& x, const IntVec& y);

// Prefactor |Aut x||Aut y| / (prod|x_i| prod|y_j|) times the coefficient of
// u^{g-1+len(x-)+len(y-)} in the sum over (r, l) and over interleavings of
// M_{l_1-r_1}, ..., M_{l_a-r_a} (in this order) with a+g+len(y)-1 copies of
// M, evaluated between <v_{y-,x-}| and |v_{y+,x+}> without bra-ket
// contractions.  Interleavings are summed by a dynamic programme over
// (number of M_c placed, number of M placed).
MatrixElementResult matrix_element(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y);

Int matrix_element_invariant(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y);

}  // namespace tropogw
