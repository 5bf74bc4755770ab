#include "core/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropogw {

namespace {

std::vector<int> positions_of(const std::string& order, char c) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        if (order[i] == c) out.push_back(i);
    return out;
}

bool blacks_connected(int a, const std::vector<std::pair<int, int>>& greys) {
    std::vector<int> parent(a);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = a;
    for (auto [p, q] : greys) {
        int rp = find(p), rq = find(q);
        if (rp != rq) {
            parent[rp] = rq;
            --components;
        }
    }
    return components == 1;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<int> SkeletonCore::black_positions() const { return positions_of(order, 'B'); }
std::vector<int> SkeletonCore::white_positions() const { return positions_of(order, 'W'); }
std::vector<int> SkeletonCore::grey_positions() const { return positions_of(order, 'G'); }

std::vector<int> SkeletonCore::white_signs() const {
    auto bp = black_positions();
    auto wp = white_positions();
    std::vector<int> s;
    for (std::size_t j = 0; j < wp.size(); ++j) s.push_back(bp[white_black[j]] < wp[j] ? -1 : 1);
    return s;
}

std::string SkeletonCore::canonical() const {
    std::string s = order + "|";
    for (auto [p, q] : grey_blacks) s += std::to_string(p) + ">" + std::to_string(q) + ",";
    s += "|";
    for (int b : white_black) s += std::to_string(b) + ",";
    return s;
}

std::string Skeleton::canonical() const {
    std::string s = core.canonical() + "|L";
    for (int v : left_whites) s += std::to_string(v) + ",";
    s += "|R";
    for (int v : right_whites) s += std::to_string(v) + ",";
    return s;
}

std::vector<SkeletonCore> enumerate_cores(int a, int g, int n2, const std::vector<int>& signs) {
    std::vector<SkeletonCore> out;
    const int ng = a + g - 1;
    if (a < 1 || ng < 0) return out;
    std::string base = std::string(a, 'B') + std::string(ng, 'G') + std::string(n2, 'W');
    std::sort(base.begin(), base.end());
    std::set<std::string> seen;
    do {
        SkeletonCore core;
        core.order = base;
        auto bp = core.black_positions();
        auto gp = core.grey_positions();
        auto wp = core.white_positions();
        // Options for every grey: (left black, right black) around it.
        std::vector<std::vector<std::pair<int, int>>> gopt(gp.size());
        bool dead = false;
        for (std::size_t i = 0; i < gp.size(); ++i) {
            for (int p = 0; p < a; ++p)
                for (int q = 0; q < a; ++q)
                    if (bp[p] < gp[i] && bp[q] > gp[i]) gopt[i].emplace_back(p, q);
            if (gopt[i].empty()) dead = true;
        }
        std::vector<std::vector<int>> wopt(wp.size());
        for (std::size_t j = 0; j < wp.size(); ++j) {
            for (int b = 0; b < a; ++b) {
                int sign = bp[b] < wp[j] ? -1 : 1;
                if (signs.empty() || signs[j] == sign) wopt[j].push_back(b);
            }
            if (wopt[j].empty()) dead = true;
        }
        if (dead) continue;
        std::vector<std::size_t> gi(gp.size(), 0);
        while (true) {
            std::vector<std::pair<int, int>> greys;
            for (std::size_t i = 0; i < gp.size(); ++i) greys.push_back(gopt[i][gi[i]]);
            if (blacks_connected(a, greys)) {
                std::vector<std::size_t> wi(wp.size(), 0);
                while (true) {
                    SkeletonCore c = core;
                    c.grey_blacks = greys;
                    for (std::size_t j = 0; j < wp.size(); ++j) c.white_black.push_back(wopt[j][wi[j]]);
                    if (seen.insert(c.canonical()).second) out.push_back(std::move(c));
                    std::size_t j = 0;
                    while (j < wp.size() && ++wi[j] == wopt[j].size()) wi[j++] = 0;
                    if (j == wp.size()) break;
                }
            }
            std::size_t i = 0;
            while (i < gp.size() && ++gi[i] == gopt[i].size()) gi[i++] = 0;
            if (i == gp.size()) break;
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<Skeleton> enumerate_skeletons(int a, int g, int n_left, int n_right, int n2) {
    std::vector<Skeleton> out;
    std::vector<std::vector<int>> lc, rc;
    std::vector<int> cur;
    compositions(n_left, a, cur, lc);
    compositions(n_right, a, cur, rc);
    std::set<std::string> seen;
    for (const auto& core : enumerate_cores(a, g, n2))
        for (const auto& L : lc)
            for (const auto& R : rc) {
                Skeleton s{core, L, R};
                if (seen.insert(s.canonical()).second) out.push_back(std::move(s));
            }
    return out;
}

FlowSystem core_flow_system(const SkeletonCore& core, const IntVec& black_targets, const IntVec& y_ordered) {
    FlowSystem s;
    s.num_vertices = static_cast<int>(core.order.size());
    s.k.assign(s.num_vertices, 0);
    auto bp = core.black_positions();
    auto gp = core.grey_positions();
    auto wp = core.white_positions();
    for (std::size_t i = 0; i < bp.size(); ++i) s.k[bp[i]] = black_targets[i];
    for (std::size_t i = 0; i < gp.size(); ++i) {
        auto [p, q] = core.grey_blacks[i];
        s.edges.emplace_back(bp[p], gp[i]);
        s.edges.emplace_back(gp[i], bp[q]);
    }
    for (std::size_t j = 0; j < wp.size(); ++j) {
        s.k[wp[j]] = y_ordered[j];
        int b = bp[core.white_black[j]];
        if (b < wp[j])
            s.edges.emplace_back(b, wp[j]);
        else
            s.edges.emplace_back(wp[j], b);
    }
    s.internal.assign(s.edges.size(), true);
    return s;
}

void enumerate_weighted(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y_ordered,
                        const IntVec& r, const IntVec& l,
                        const std::function<void(const FloorDiagram&)>& visit) {
    const int a = static_cast<int>(shape.height());
    if (static_cast<int>(r.size()) != a || static_cast<int>(l.size()) != a)
        throw Error(ErrorCode::InvalidArgument, "r and l must have length a");
    std::vector<int> signs;
    for (auto v : y_ordered) signs.push_back(v < 0 ? -1 : 1);
    const int n1 = static_cast<int>(x.size());
    for (const auto& core : enumerate_cores(a, g, static_cast<int>(y_ordered.size()), signs)) {
        auto bp = core.black_positions();
        std::vector<int> assign(n1, 0);
        while (true) {
            IntVec targets(a);
            for (int i = 0; i < a; ++i) targets[i] = r[i] - l[i];
            for (int j = 0; j < n1; ++j) targets[assign[j]] += x[j];
            FlowSystem sys = core_flow_system(core, targets, y_ordered);
            FlowSolver(sys).for_each([&](const IntVec& w) {
                for (auto v : w)
                    if (v == 0) return;
                FloorDiagram d;
                const int nc = static_cast<int>(core.order.size());
                int bi = 0, wi = 0;
                for (int p = 0; p < nc; ++p) {
                    char c = core.order[p];
                    if (c == 'B') {
                        d.vertices.push_back({Color::Black, Region::C, p, r[bi] - l[bi], -1});
                        ++bi;
                    } else if (c == 'G') {
                        d.vertices.push_back({Color::Grey, Region::C, p, 0, -1});
                    } else {
                        d.vertices.push_back({Color::White, Region::C, p, y_ordered[wi], wi});
                        ++wi;
                    }
                }
                for (std::size_t e = 0; e < sys.edges.size(); ++e)
                    d.edges.push_back({sys.edges[e].first, sys.edges[e].second, w[e]});
                for (int j = 0; j < n1; ++j) {
                    int id = static_cast<int>(d.vertices.size());
                    bool left = x[j] > 0;
                    d.vertices.push_back({Color::White, left ? Region::L : Region::R, -1, x[j], j});
                    int b = bp[assign[j]];
                    if (left)
                        d.edges.push_back({id, b, x[j]});
                    else
                        d.edges.push_back({b, id, -x[j]});
                }
                visit(d);
            });
            int j = 0;
            while (j < n1 && ++assign[j] == a) assign[j++] = 0;
            if (j == n1) break;
        }
    }
}

Int multiplicity(const FloorDiagram& d) {
    Int m = 1;
    for (const auto& e : d.edges)
        if (d.vertices[e.tail].region == Region::C && d.vertices[e.head].region == Region::C)
            m *= static_cast<long>(e.weight);
    return m;
}

StructuralReport structural_check(const FloorDiagram& d, int g) {
    auto fail = [](std::string s) { return StructuralReport{false, std::move(s)}; };
    const int nv = static_cast<int>(d.vertices.size());
    std::vector<int> indeg(nv, 0), outdeg(nv, 0);
    std::vector<std::int64_t> div(nv, 0);
    int blacks = 0, greys = 0, whites = 0, bg_edges = 0, bw_edges = 0;
    for (const auto& v : d.vertices) {
        if (v.region != Region::C && v.color != Color::White) return fail("vertices in L and R must be white");
        if (v.color == Color::Black) ++blacks;
        if (v.color == Color::Grey) ++greys;
        if (v.color == Color::White) ++whites;
    }
    for (const auto& e : d.edges) {
        if (e.tail < 0 || e.head < 0 || e.tail >= nv || e.head >= nv) return fail("edge endpoint out of range");
        if (e.weight <= 0) return fail("edge weights must be positive");
        const auto& t = d.vertices[e.tail];
        const auto& h = d.vertices[e.head];
        if (t.region == Region::R || h.region == Region::L) return fail("edges must point from L towards R");
        if (t.region == Region::C && h.region == Region::C && !(t.position < h.position))
            return fail("edges in C must point left to right");
        ++outdeg[e.tail];
        ++indeg[e.head];
        div[e.tail] += e.weight;
        div[e.head] -= e.weight;
        bool tb = t.color == Color::Black, hb = h.color == Color::Black;
        if ((tb && h.color == Color::Grey) || (hb && t.color == Color::Grey)) ++bg_edges;
        if ((tb && h.color == Color::White) || (hb && t.color == Color::White)) ++bw_edges;
        if (!tb && !hb) return fail("every edge must have a black endpoint");
    }
    std::vector<std::vector<int>> nbr(nv);
    for (const auto& e : d.edges) {
        nbr[e.tail].push_back(e.head);
        nbr[e.head].push_back(e.tail);
    }
    for (int i = 0; i < nv; ++i) {
        const auto& v = d.vertices[i];
        if (v.color == Color::White) {
            if (indeg[i] + outdeg[i] != 1) return fail("white valency must be one");
            if (d.vertices[nbr[i][0]].color != Color::Black) return fail("white must attach to a black");
        }
        if (v.color == Color::Grey) {
            if (indeg[i] != 1 || outdeg[i] != 1) return fail("grey valency must be two (one in, one out)");
            if (d.vertices[nbr[i][0]].color != Color::Black || d.vertices[nbr[i][1]].color != Color::Black)
                return fail("grey neighbours must be black");
            if (nbr[i][0] == nbr[i][1]) return fail("grey neighbours must be distinct");
        }
        if (div[i] != v.divergence) return fail("divergence mismatch at vertex " + std::to_string(i));
    }
    if (greys != blacks + g - 1) return fail("grey count must be a+g-1");
    if (bg_edges != 2 * greys) return fail("black-grey edge count must be 2(g+a-1)");
    if (bw_edges != whites) return fail("black-white edge count must equal the number of whites");
    if (1 - nv + static_cast<int>(d.edges.size()) != g) return fail("genus identity 1-|V|+|E| = g");
    if (1 - blacks + greys != g) return fail("genus identity 1-v_b+v_g = g");
    // Connectivity.
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{0};
    seen[0] = nv > 0;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int u : nbr[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    if (count != nv) return fail("diagram must be connected");
    return {};
}

}  // namespace tropogw
