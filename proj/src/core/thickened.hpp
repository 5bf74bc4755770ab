#pragma once

#include "core/polygon.hpp"
#include "core/flows.hpp"

#include <functional>

namespace tropogw {

// Vertices sit on a line; bounded edges point left to right.  A size-0 vertex
// has exactly two thickened half-edges (one on each side), a size-1 vertex
// none.  The thickened half of a bounded edge is the one at its size-0 end.
struct ThickVertex {
    int size;               // 0 or 1
    std::int64_t divergence;
};

struct ThickEdge {
    int tail, head;
    std::int64_t weight;
};

// Non-thick ends carry x values and sit on size-1 vertices; thick ends carry
// y values and sit on size-0 vertices.  Positive values point right.
struct ThickEnd {
    int vertex;
    std::int64_t value;
    bool thick;
    int label;  // index into x (non-thick) or y (thick)
};

struct ThickenedDiagram {
    std::vector<ThickVertex> vertices;
    std::vector<ThickEdge> edges;
    std::vector<ThickEnd> ends;
};

// Number of size-0 vertices forced by the genus: a + g + len(y) - 1.
std::int64_t size_zero_count(std::int64_t a, std::int64_t g, std::size_t n2);

// All thickened diagrams (ends labelled) over all arrangements (r, l); genus
// is 1 - |V| + |E|, so g may be negative for disconnected configurations.
void enumerate_thickened(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y,
                         const std::function<void(const ThickenedDiagram&)>& visit);

Int thickened_multiplicity(const ThickenedDiagram& d);
bool thickened_connected(const ThickenedDiagram& d);
int thickened_genus(const ThickenedDiagram& d);

// Check the defining invariants (thickening counts, divergences, directions).
bool thickened_valid(const ThickenedDiagram& d, std::string* why = nullptr);

struct DisconnectedResult {
    Int value = 0;
    Int connected_value = 0;  // contribution of connected diagrams
};

// Sum of mu over all thickened diagrams, computed with ends grouped by value.
DisconnectedResult disconnected_invariant(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y);

}  // namespace tropogw
