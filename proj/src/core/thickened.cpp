#include "core/thickened.hpp"

#include "core/tangency.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropogw {

std::int64_t size_zero_count(std::int64_t a, std::int64_t g, std::size_t n2) {
    return a + g + static_cast<std::int64_t>(n2) - 1;
}

namespace {

// A group of ends that share a value.  In labelled mode every group has
// count one and `labels` holds its single label.
struct EndGroup {
    std::int64_t value;
    int count;
    std::vector<int> labels;
};

std::vector<EndGroup> group_ends(const IntVec& v, bool labelled) {
    std::vector<EndGroup> out;
    if (labelled) {
        for (int i = 0; i < static_cast<int>(v.size()); ++i) out.push_back({v[i], 1, {i}});
        return out;
    }
    std::map<std::int64_t, std::vector<int>> by;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) by[v[i]].push_back(i);
    for (auto& [val, labels] : by) out.push_back({val, static_cast<int>(labels.size()), labels});
    return out;
}

// Slot of a size-0 vertex: either a bounded edge to a size-1 vertex (vertex
// id >= 0) or an end from y-group `group`.
struct Slot {
    int vertex = -1;
    int group = -1;
};

struct Structure {
    std::vector<int> sizes;  // along the line
    std::vector<std::int64_t> divergences;
    std::vector<Slot> left, right;  // per vertex (used for size-0 only)
};

class Enumerator {
public:
    Enumerator(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y, bool labelled)
        : x_(x), y_(y), labelled_(labelled) {
        a_ = static_cast<int>(shape.height());
        s_ = size_zero_count(a_, g, y.size());
        xg_ = group_ends(x, labelled);
        yg_ = group_ends(y, labelled);
        arrangements_ = boundary_arrangements(shape);
    }

    // visit(structure, black x-distribution [group][black], multiplier)
    template <class Visit>
    void run(Visit&& visit) {
        if (s_ < 0) return;
        const int n = a_ + static_cast<int>(s_);
        std::vector<int> sizes(n, 0);
        std::fill(sizes.begin(), sizes.begin() + a_, 1);
        std::sort(sizes.begin(), sizes.end());
        do {
            for (const auto& [r, l] : arrangements_) {
                Structure st;
                st.sizes = sizes;
                st.divergences.assign(n, 0);
                int bi = 0;
                for (int p = 0; p < n; ++p)
                    if (sizes[p] == 1) {
                        st.divergences[p] = l[bi] - r[bi];
                        ++bi;
                    }
                st.left.assign(n, {});
                st.right.assign(n, {});
                std::vector<int> remaining;
                for (const auto& gr : yg_) remaining.push_back(gr.count);
                slots(st, 0, remaining, visit);
            }
        } while (std::next_permutation(sizes.begin(), sizes.end()));
    }

    const std::vector<EndGroup>& x_groups() const { return xg_; }
    const std::vector<EndGroup>& y_groups() const { return yg_; }
    int a() const { return a_; }

private:
    template <class Visit>
    void slots(Structure& st, int p, std::vector<int>& remaining, Visit& visit) {
        const int n = static_cast<int>(st.sizes.size());
        while (p < n && st.sizes[p] == 1) ++p;
        if (p == n) {
            for (int c : remaining)
                if (c != 0) return;
            distribute(st, visit);
            return;
        }
        std::vector<Slot> lefts, rights;
        for (int q = 0; q < p; ++q)
            if (st.sizes[q] == 1) lefts.push_back({q, -1});
        for (int gi = 0; gi < static_cast<int>(yg_.size()); ++gi)
            if (yg_[gi].value < 0 && remaining[gi] > 0) lefts.push_back({-1, gi});
        for (int q = p + 1; q < n; ++q)
            if (st.sizes[q] == 1) rights.push_back({q, -1});
        for (int gi = 0; gi < static_cast<int>(yg_.size()); ++gi)
            if (yg_[gi].value > 0 && remaining[gi] > 0) rights.push_back({-1, gi});
        for (const auto& L : lefts) {
            if (L.group >= 0) --remaining[L.group];
            for (const auto& R : rights) {
                if (R.group >= 0) {
                    if (remaining[R.group] == 0) continue;
                    --remaining[R.group];
                }
                // Flow conservation across a pass-through is checked by the
                // flow solver; prune the obvious mismatch here.
                bool ok = !(L.group >= 0 && R.group >= 0 && -yg_[L.group].value != yg_[R.group].value);
                if (ok) {
                    st.left[p] = L;
                    st.right[p] = R;
                    slots(st, p + 1, remaining, visit);
                }
                if (R.group >= 0) ++remaining[R.group];
            }
            if (L.group >= 0) ++remaining[L.group];
        }
    }

    template <class Visit>
    void distribute(const Structure& st, Visit& visit) {
        // dist[group][black ordinal] = number of ends of that group on it.
        std::vector<std::vector<int>> dist(xg_.size(), std::vector<int>(a_, 0));
        distribute_group(st, 0, dist, visit);
    }

    template <class Visit>
    void distribute_group(const Structure& st, std::size_t gi, std::vector<std::vector<int>>& dist, Visit& visit) {
        if (gi == xg_.size()) {
            visit(st, static_cast<const std::vector<std::vector<int>>&>(dist));
            return;
        }
        compose(st, gi, 0, xg_[gi].count, dist, visit);
    }

    template <class Visit>
    void compose(const Structure& st, std::size_t gi, int b, int left, std::vector<std::vector<int>>& dist,
                 Visit& visit) {
        if (b == a_ - 1) {
            dist[gi][b] = left;
            distribute_group(st, gi + 1, dist, visit);
            dist[gi][b] = 0;
            return;
        }
        for (int c = 0; c <= left; ++c) {
            dist[gi][b] = c;
            compose(st, gi, b + 1, left - c, dist, visit);
        }
        dist[gi][b] = 0;
    }

    IntVec x_, y_;
    bool labelled_;
    int a_;
    std::int64_t s_;
    std::vector<EndGroup> xg_, yg_;
    std::vector<std::pair<IntVec, IntVec>> arrangements_;
};

// Flow system on all line vertices; k already has end contributions removed.
FlowSystem structure_system(const Structure& st, const std::vector<EndGroup>& xg, const std::vector<EndGroup>& yg,
                            const std::vector<std::vector<int>>& dist, bool* valence_ok) {
    const int n = static_cast<int>(st.sizes.size());
    FlowSystem sys;
    sys.num_vertices = n;
    sys.k = IntVec(st.divergences.begin(), st.divergences.end());
    std::vector<int> valence(n, 0);
    for (int p = 0; p < n; ++p) {
        if (st.sizes[p] != 0) continue;
        const auto& L = st.left[p];
        const auto& R = st.right[p];
        if (L.vertex >= 0) {
            sys.edges.emplace_back(L.vertex, p);
            ++valence[L.vertex];
        } else {
            sys.k[p] -= yg[L.group].value;
        }
        if (R.vertex >= 0) {
            sys.edges.emplace_back(p, R.vertex);
            ++valence[R.vertex];
        } else {
            sys.k[p] -= yg[R.group].value;
        }
    }
    std::vector<int> black_ids;
    for (int p = 0; p < n; ++p)
        if (st.sizes[p] == 1) black_ids.push_back(p);
    for (std::size_t gi = 0; gi < xg.size(); ++gi)
        for (std::size_t b = 0; b < black_ids.size(); ++b) {
            sys.k[black_ids[b]] -= xg[gi].value * dist[gi][b];
            valence[black_ids[b]] += dist[gi][b];
        }
    *valence_ok = true;
    for (int id : black_ids)
        if (valence[id] == 0) *valence_ok = false;
    sys.internal.assign(sys.edges.size(), true);
    return sys;
}

Int multinomial(int total, const std::vector<int>& parts) {
    Int r = factorial(static_cast<unsigned>(total));
    for (int p : parts) r /= factorial(static_cast<unsigned>(p));
    return r;
}

}  // namespace

void enumerate_thickened(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y,
                         const std::function<void(const ThickenedDiagram&)>& visit) {
    shape.validate();
    check_lambda(shape, DivergenceData{x, y});
    Enumerator en(shape, g, x, y, true);
    const auto& xg = en.x_groups();
    const auto& yg = en.y_groups();
    en.run([&](const Structure& st, const std::vector<std::vector<int>>& dist) {
        bool valence_ok = false;
        FlowSystem sys = structure_system(st, xg, yg, dist, &valence_ok);
        if (!valence_ok) return;
        FlowSolver(sys).for_each([&](const IntVec& w) {
            for (auto v : w)
                if (v == 0) return;
            ThickenedDiagram d;
            const int n = static_cast<int>(st.sizes.size());
            for (int p = 0; p < n; ++p) d.vertices.push_back({st.sizes[p], st.divergences[p]});
            for (std::size_t e = 0; e < sys.edges.size(); ++e)
                d.edges.push_back({sys.edges[e].first, sys.edges[e].second, w[e]});
            for (int p = 0; p < n; ++p) {
                if (st.sizes[p] != 0) continue;
                for (const Slot* s : {&st.left[p], &st.right[p]})
                    if (s->group >= 0) d.ends.push_back({p, yg[s->group].value, true, yg[s->group].labels[0]});
            }
            int b = 0;
            for (int p = 0; p < n; ++p) {
                if (st.sizes[p] != 1) continue;
                for (std::size_t gi = 0; gi < xg.size(); ++gi)
                    if (dist[gi][b]) d.ends.push_back({p, xg[gi].value, false, xg[gi].labels[0]});
                ++b;
            }
            visit(d);
        });
    });
}

DisconnectedResult disconnected_invariant(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y) {
    shape.validate();
    check_lambda(shape, DivergenceData{x, y});
    Enumerator en(shape, g, x, y, false);
    const auto& xg = en.x_groups();
    const auto& yg = en.y_groups();
    Int y_symmetry = 1;
    for (const auto& gr : yg) y_symmetry *= factorial(static_cast<unsigned>(gr.count));
    DisconnectedResult res;
    std::map<std::vector<std::int64_t>, std::pair<Int, Int>> memo;
    en.run([&](const Structure& st, const std::vector<std::vector<int>>& dist) {
        bool valence_ok = false;
        FlowSystem sys = structure_system(st, xg, yg, dist, &valence_ok);
        if (!valence_ok) return;
        std::vector<std::int64_t> key(sys.k.begin(), sys.k.end());
        key.push_back(-1);
        for (auto [t, h] : sys.edges) {
            key.push_back(t);
            key.push_back(h);
        }
        auto it = memo.find(key);
        if (it == memo.end()) {
            // Connected part: the bounded edges must join every vertex once
            // all weights are positive, which is a property of the structure.
            const int n = sys.num_vertices;
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            int comps = n;
            for (auto [t, h] : sys.edges) {
                int a = find(t), b = find(h);
                if (a != b) {
                    parent[a] = b;
                    --comps;
                }
            }
            Int v = weighted_partition_function(sys);
            it = memo.emplace(key, std::make_pair(v, comps == 1 ? v : Int(0))).first;
        }
        if (it->second.first == 0) return;
        Int mult = y_symmetry;
        for (std::size_t gi = 0; gi < xg.size(); ++gi) mult *= multinomial(xg[gi].count, dist[gi]);
        res.value += mult * it->second.first;
        res.connected_value += mult * it->second.second;
    });
    return res;
}

Int thickened_multiplicity(const ThickenedDiagram& d) {
    Int m = 1;
    for (const auto& e : d.edges) m *= static_cast<long>(e.weight);
    return m;
}

bool thickened_connected(const ThickenedDiagram& d) {
    const int n = static_cast<int>(d.vertices.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = n;
    for (const auto& e : d.edges) {
        int a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

int thickened_genus(const ThickenedDiagram& d) {
    return 1 - static_cast<int>(d.vertices.size()) + static_cast<int>(d.edges.size());
}

bool thickened_valid(const ThickenedDiagram& d, std::string* why) {
    auto fail = [&](const char* s) {
        if (why) *why = s;
        return false;
    };
    const int n = static_cast<int>(d.vertices.size());
    std::vector<int> thick(n, 0), half(n, 0);
    std::vector<std::int64_t> div(n, 0);
    for (const auto& e : d.edges) {
        if (!(e.tail < e.head)) return fail("bounded edges must point right");
        if (e.weight <= 0) return fail("expansion factors must be positive");
        int s0 = (d.vertices[e.tail].size == 0) + (d.vertices[e.head].size == 0);
        if (s0 != 1) return fail("exactly one half-edge of a bounded edge is thickened");
        ++thick[d.vertices[e.tail].size == 0 ? e.tail : e.head];
        ++half[e.tail];
        ++half[e.head];
        div[e.tail] += e.weight;
        div[e.head] -= e.weight;
    }
    for (const auto& end : d.ends) {
        bool on_size0 = d.vertices[end.vertex].size == 0;
        if (end.thick != on_size0) return fail("thick ends sit on size-0 vertices, non-thick ends on size-1 vertices");
        if (end.thick) ++thick[end.vertex];
        ++half[end.vertex];
        div[end.vertex] += end.value;
    }
    for (int v = 0; v < n; ++v) {
        if (thick[v] != 2 - 2 * d.vertices[v].size) return fail("a vertex of size s has 2-2s thickened half-edges");
        if (d.vertices[v].size == 0 && half[v] != 2) return fail("size-0 vertices are two-valent");
        if (half[v] == 0) return fail("vertices carry at least one half-edge");
        if (div[v] != d.vertices[v].divergence) return fail("divergence mismatch");
    }
    return true;
}

}  // namespace tropogw
