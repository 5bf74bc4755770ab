#pragma once

#include "core/common.hpp"

#include <utility>

namespace tropogw {

// A·w = k with w >= 0, where column e of A is +1 at the tail and -1 at the head
// of edge e.  k(v) is therefore outflow minus inflow at v.  `internal` marks the
// edges whose weights enter the product weight.
struct FlowSystem {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    IntVec k;
    std::vector<bool> internal;

    void validate() const;
    FlowSystem dilated(std::int64_t t) const;
};

// Reduces the system to its free (non-tree) edge flows.  Tree flows are affine
// in the free flows with coefficients in {-1, 0, 1}; the free flows range over
// a box bounded by the total positive divergence (valid because the digraph is
// acyclic, so every flow decomposes into source-to-sink paths).
class FlowSolver {
public:
    explicit FlowSolver(const FlowSystem& system);

    bool feasible() const { return feasible_; }
    int free_count() const { return static_cast<int>(free_edges_.size()); }
    const std::vector<int>& free_edges() const { return free_edges_; }

    template <class Visit>
    void for_each(Visit&& visit) const {
        if (!feasible_) return;
        IntVec w(num_edges_, 0);
        IntVec cur = constant_;
        recurse(0, cur, w, visit);
    }

private:
    template <class Visit>
    void recurse(int depth, IntVec& cur, IntVec& w, Visit& visit) const {
        const int f = free_count();
        if (depth == f) {
            for (std::size_t i = 0; i < tree_edges_.size(); ++i) {
                if (cur[i] < 0) return;
                w[tree_edges_[i]] = cur[i];
            }
            visit(static_cast<const IntVec&>(w));
            return;
        }
        std::int64_t lo = 0, hi = bound_;
        for (std::size_t i = 0; i < tree_edges_.size(); ++i) {
            std::int64_t slack = cur[i] + tail_max_[i * (f + 1) + depth + 1];
            int c = coef_[i * f + depth];
            if (c == 0) {
                if (slack < 0) return;
            } else if (c > 0) {
                lo = std::max(lo, -slack);
            } else {
                hi = std::min(hi, slack);
            }
        }
        for (std::int64_t t = lo; t <= hi; ++t) {
            for (std::size_t i = 0; i < tree_edges_.size(); ++i) cur[i] += coef_[i * f + depth] * t;
            w[free_edges_[depth]] = t;
            recurse(depth + 1, cur, w, visit);
            for (std::size_t i = 0; i < tree_edges_.size(); ++i) cur[i] -= coef_[i * f + depth] * t;
        }
    }

    std::size_t num_edges_ = 0;
    bool feasible_ = true;
    std::int64_t bound_ = 0;
    std::vector<int> tree_edges_, free_edges_;
    IntVec constant_;          // per tree edge
    std::vector<int> coef_;    // tree edge x free edge, row-major
    IntVec tail_max_;          // tree edge x (free+1): max of sum_{j>=d} coef*t_j
};

std::vector<IntVec> lattice_flows(const FlowSystem& system);

struct PartitionSum {
    Int value = 0;                 // sum over lattice flows of prod_{internal} w_e
    std::int64_t points = 0;       // number of lattice flows
    std::int64_t positive = 0;     // flows whose internal product is nonzero
};

PartitionSum weighted_partition(const FlowSystem& system);
Int weighted_partition_function(const FlowSystem& system);

// Sum of prod_{internal} w_e over t·P, and over the relative interior of t·P.
Int dilated_sum(const FlowSystem& system, std::int64_t t);
Int interior_sum(const FlowSystem& system, std::int64_t t);

// Dimension of the affine hull of the lattice points of P (which, P being a
// lattice polytope, is the dimension of P); -1 when P is empty.
int polytope_dimension(const FlowSystem& system);

// Edges that vanish on every point of P.
std::vector<bool> identically_zero_edges(const FlowSystem& system);

}  // namespace tropogw
