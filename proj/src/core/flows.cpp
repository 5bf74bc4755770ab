#include "core/flows.hpp"

#include <algorithm>
#include <numeric>

namespace tropogw {

void FlowSystem::validate() const {
    if (static_cast<int>(k.size()) != num_vertices)
        throw Error(ErrorCode::InvalidArgument, "divergence vector length differs from vertex count");
    if (internal.size() != edges.size())
        throw Error(ErrorCode::InvalidArgument, "internal mask length differs from edge count");
    for (const auto& [t, h] : edges) {
        if (t < 0 || h < 0 || t >= num_vertices || h >= num_vertices || t == h)
            throw Error(ErrorCode::InvalidArgument, "edge endpoints must be distinct valid vertices");
    }
    // Acyclicity keeps the polytope bounded.
    std::vector<int> indeg(num_vertices, 0);
    std::vector<std::vector<int>> out(num_vertices);
    for (const auto& [t, h] : edges) {
        out[t].push_back(h);
        ++indeg[h];
    }
    std::vector<int> stack;
    for (int v = 0; v < num_vertices; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int h : out[v])
            if (--indeg[h] == 0) stack.push_back(h);
    }
    if (seen != num_vertices)
        throw Error(ErrorCode::InvalidArgument, "flow digraph has a directed cycle; the polytope is unbounded");
}

FlowSystem FlowSystem::dilated(std::int64_t t) const {
    FlowSystem s = *this;
    for (auto& v : s.k) v *= t;
    return s;
}

FlowSolver::FlowSolver(const FlowSystem& system) : num_edges_(system.edges.size()) {
    system.validate();
    const int n = system.num_vertices;
    const int m = static_cast<int>(system.edges.size());

    // Spanning forest, lowest edge index first.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<bool> in_tree(m, false);
    for (int e = 0; e < m; ++e) {
        auto [t, h] = system.edges[e];
        int rt = find(t), rh = find(h);
        if (rt != rh) {
            parent[rt] = rh;
            in_tree[e] = true;
        }
    }
    for (int e = 0; e < m; ++e) (in_tree[e] ? tree_edges_ : free_edges_).push_back(e);
    const int f = static_cast<int>(free_edges_.size());

    for (auto v : system.k)
        if (v > 0) bound_ += v;

    // Excess of each vertex: k(v) minus the free-edge contribution, as an
    // affine form in the free flows.
    std::vector<std::int64_t> ex_const(system.k.begin(), system.k.end());
    std::vector<std::vector<int>> ex_coef(n, std::vector<int>(f, 0));
    for (int j = 0; j < f; ++j) {
        auto [t, h] = system.edges[free_edges_[j]];
        ex_coef[t][j] -= 1;  // outflow on a free edge is supplied by t_j
        ex_coef[h][j] += 1;
    }

    // Leaf peeling: repeatedly remove a degree-one vertex of the forest; the
    // flow on its tree edge equals its accumulated excess (signed by direction).
    std::vector<std::vector<int>> adj(n);
    for (int idx = 0; idx < static_cast<int>(tree_edges_.size()); ++idx) {
        auto [t, h] = system.edges[tree_edges_[idx]];
        adj[t].push_back(idx);
        adj[h].push_back(idx);
    }
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<bool> removed_edge(tree_edges_.size(), false), done(n, false);
    constant_.assign(tree_edges_.size(), 0);
    coef_.assign(tree_edges_.size() * f, 0);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push_back(v);
    while (!leaves.empty()) {
        int v = leaves.back();
        leaves.pop_back();
        if (done[v] || degree[v] != 1) continue;
        int idx = -1;
        for (int e : adj[v])
            if (!removed_edge[e]) idx = e;
        auto [t, h] = system.edges[tree_edges_[idx]];
        int other = (t == v) ? h : t;
        int sign = (t == v) ? 1 : -1;  // w = excess if edge leaves v
        constant_[idx] = sign * ex_const[v];
        for (int j = 0; j < f; ++j) coef_[idx * f + j] = sign * ex_coef[v][j];
        ex_const[other] += ex_const[v];
        for (int j = 0; j < f; ++j) ex_coef[other][j] += ex_coef[v][j];
        removed_edge[idx] = true;
        done[v] = true;
        if (--degree[other] == 1) leaves.push_back(other);
        --degree[v];
    }
    // Each component root must end with zero excess.  Free-edge coefficients
    // cancel automatically inside a component; only the constant can fail.
    for (int v = 0; v < n; ++v)
        if (!done[v] && ex_const[v] != 0) feasible_ = false;

    tail_max_.assign(tree_edges_.size() * (f + 1), 0);
    for (std::size_t i = 0; i < tree_edges_.size(); ++i)
        for (int d = f - 1; d >= 0; --d) {
            int c = coef_[i * f + d];
            tail_max_[i * (f + 1) + d] = tail_max_[i * (f + 1) + d + 1] + (c > 0 ? c * bound_ : 0);
        }
}

std::vector<IntVec> lattice_flows(const FlowSystem& system) {
    std::vector<IntVec> out;
    FlowSolver(system).for_each([&](const IntVec& w) { out.push_back(w); });
    return out;
}

PartitionSum weighted_partition(const FlowSystem& system) {
    PartitionSum r;
    FlowSolver solver(system);
    Int term;
    solver.for_each([&](const IntVec& w) {
        ++r.points;
        term = 1;
        for (std::size_t e = 0; e < w.size(); ++e)
            if (system.internal[e]) {
                if (w[e] == 0) return;
                term *= static_cast<long>(w[e]);
            }
        ++r.positive;
        r.value += term;
    });
    return r;
}

Int weighted_partition_function(const FlowSystem& system) { return weighted_partition(system).value; }

Int dilated_sum(const FlowSystem& system, std::int64_t t) {
    if (t < 0) throw Error(ErrorCode::InvalidArgument, "dilation factor must be nonnegative");
    return weighted_partition_function(system.dilated(t));
}

std::vector<bool> identically_zero_edges(const FlowSystem& system) {
    std::vector<bool> zero(system.edges.size(), true);
    FlowSolver(system).for_each([&](const IntVec& w) {
        for (std::size_t e = 0; e < w.size(); ++e)
            if (w[e] != 0) zero[e] = false;
    });
    return zero;
}

Int interior_sum(const FlowSystem& system, std::int64_t t) {
    if (t <= 0) throw Error(ErrorCode::InvalidArgument, "interior sums need a positive dilation");
    auto zero = identically_zero_edges(system);
    FlowSystem s = system.dilated(t);
    Int total = 0, term;
    FlowSolver(s).for_each([&](const IntVec& w) {
        term = 1;
        for (std::size_t e = 0; e < w.size(); ++e) {
            if (!zero[e] && w[e] == 0) return;
            if (system.internal[e]) term *= static_cast<long>(w[e]);
        }
        total += term;
    });
    return total;
}

int polytope_dimension(const FlowSystem& system) {
    auto points = lattice_flows(system);
    if (points.empty()) return -1;
    // Rank of the difference vectors, by exact elimination over the rationals.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> r(points[i].size());
        for (std::size_t e = 0; e < r.size(); ++e) r[e] = points[i][e] - points[0][e];
        rows.push_back(std::move(r));
    }
    int rank = 0;
    const std::size_t cols = system.edges.size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rat factor = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace tropogw
