#pragma once

#include "core/polygon.hpp"

#include <map>

namespace tropogw {

// Divergences of the white vertices: x for the unbounded regions, y for the
// centre.  Positive entries are top tangencies, negative ones bottom tangencies.
struct DivergenceData {
    IntVec x, y;
};

// alpha_i = #{x_j = -i}, beta_i = #{y_j = -i}, alpha_tilde_i = #{x_j = i},
// beta_tilde_i = #{y_j = i}.  Stored sparsely; absent keys mean zero.
struct MultiplicityVector {
    std::map<std::int64_t, std::int64_t> alpha, beta, alpha_tilde, beta_tilde;
    bool operator==(const MultiplicityVector&) const = default;
};

// Entries nonzero and sum x + sum y + K = 0.
void check_lambda(const PolygonShape& shape, const DivergenceData& data);

// Additionally requires the positive entries to sum to d_t (and hence the
// negative ones to d_b).
void check_degrees(const Polygon& polygon, const DivergenceData& data);

MultiplicityVector to_multiplicity(const DivergenceData& data);

// Canonical representative: x and y sorted by descending value.
DivergenceData from_multiplicity(const MultiplicityVector& mv);
DivergenceData from_multiplicity(const MultiplicityVector& mv, const Polygon& polygon);

std::int64_t point_count(const Polygon& polygon, std::int64_t g, const MultiplicityVector& mv);

// Positive and negative parts as partitions (absolute values, descending).
IntVec positive_part(const IntVec& v);
IntVec negative_part(const IntVec& v);

}  // namespace tropogw
