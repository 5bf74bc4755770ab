#pragma once

#include "core/polygon.hpp"
#include "core/flows.hpp"

#include <functional>
#include <string>

namespace tropogw {

enum class Color { Black, White, Grey };
enum class Region { L, C, R };

struct FloorVertex {
    Color color;
    Region region;
    int position;              // index along C, or -1 for L/R whites
    std::int64_t divergence;   // prescribed divergence
    int label = -1;            // x index for L/R whites, y index for C whites
};

struct FloorEdge {
    int tail, head;
    std::int64_t weight;
};

struct FloorDiagram {
    std::vector<FloorVertex> vertices;
    std::vector<FloorEdge> edges;
};

// The central part of a skeleton: the colour sequence along C, the two black
// neighbours of every grey, and the black neighbour of every C-white.  Blacks
// are referred to by their ordinal among blacks.  A C-white attached to a
// black on its left is a sink (negative y), otherwise a source.
struct SkeletonCore {
    std::string order;                            // 'B', 'G', 'W'
    std::vector<std::pair<int, int>> grey_blacks;  // (left black, right black)
    std::vector<int> white_black;

    std::vector<int> black_positions() const;
    std::vector<int> white_positions() const;
    std::vector<int> grey_positions() const;
    std::vector<int> white_signs() const;  // -1 sink, +1 source
    std::string canonical() const;
};

// Full unweighted shape: the core plus how many L- and R-whites hang off
// each black.
struct Skeleton {
    SkeletonCore core;
    std::vector<int> left_whites, right_whites;
    std::string canonical() const;
};

// All connected cores with a blacks, a+g-1 greys and n2 C-whites.  When
// `signs` is nonempty, only cores whose i-th C-white has sign signs[i].
std::vector<SkeletonCore> enumerate_cores(int a, int g, int n2, const std::vector<int>& signs = {});

std::vector<Skeleton> enumerate_skeletons(int a, int g, int n_left, int n_right, int n2);

// Flow system on the C vertices of a core.  Vertex ids are C positions.
// black_targets are the divergences required on the bounded (C-internal)
// edges at each black, i.e. r_i - l_i plus the x values attached to black i.
FlowSystem core_flow_system(const SkeletonCore& core, const IntVec& black_targets, const IntVec& y_ordered);

// Every weighted diagram for fixed (r, l) and y order.  x whites are
// labelled, so assignments to blacks are functions of the x index.
void enumerate_weighted(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y_ordered,
                        const IntVec& r, const IntVec& l,
                        const std::function<void(const FloorDiagram&)>& visit);

Int multiplicity(const FloorDiagram& d);

struct StructuralReport {
    bool ok = true;
    std::string clause;  // first violated clause
};

StructuralReport structural_check(const FloorDiagram& d, int g);

}  // namespace tropogw
