#pragma once

#include "core/diagrams.hpp"
#include "core/tangency.hpp"

#include <functional>

namespace tropogw {

struct InvariantOptions {
    int threads = 1;
    // When set, every weighted diagram is materialized and handed over (this
    // bypasses memoization and is meant for small instances).
    std::function<void(const FloorDiagram&)> on_diagram;
};

struct InvariantResult {
    Int value = 0;
    std::int64_t diagram_count = 0;  // weighted diagrams with nonzero multiplicity
};

// Sum over arrangements (r, l), distinct orderings of y, skeleton cores, x
// assignments and lattice flows of the internal-edge product.  Requires only
// membership in Lambda; the top/bottom degrees are not checked here.
InvariantResult function_F_detailed(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y,
                                    const InvariantOptions& options = {});

Int function_F(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y);

// Same sum restricted to a single arrangement (r, l).
InvariantResult arrangement_term(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y,
                                 const IntVec& r, const IntVec& l);

// Checks the tangency degrees against the polygon first.
InvariantResult connected_invariant(const Polygon& polygon, int g, const DivergenceData& data,
                                    const InvariantOptions& options = {});

}  // namespace tropogw
