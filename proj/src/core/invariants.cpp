#include "core/invariants.hpp"

#include <map>
#include <mutex>
#include <thread>

namespace tropogw {

namespace {

struct Task {
    IntVec r, l, y;
};

class ConnectedSum {
public:
    ConnectedSum(const PolygonShape& shape, int g, const IntVec& x) : shape_(shape), g_(g), x_(x) {
        a_ = static_cast<int>(shape.height());
    }

    // Sum for one (r, l, y order); memo is per worker.
    InvariantResult run(const Task& t, const std::function<void(const FloorDiagram&)>& on_diagram) {
        InvariantResult res;
        if (on_diagram) {
            enumerate_weighted(shape_, g_, x_, t.y, t.r, t.l, [&](const FloorDiagram& d) {
                ++res.diagram_count;
                res.value += multiplicity(d);
                on_diagram(d);
            });
            return res;
        }
        std::vector<int> signs;
        for (auto v : t.y) signs.push_back(v < 0 ? -1 : 1);
        auto it = cores_.find(signs);
        if (it == cores_.end())
            it = cores_.emplace(signs, enumerate_cores(a_, g_, static_cast<int>(t.y.size()), signs)).first;
        const int n1 = static_cast<int>(x_.size());
        for (std::size_t ci = 0; ci < it->second.size(); ++ci) {
            const auto& core = it->second[ci];
            std::vector<int> assign(n1, 0);
            while (true) {
                IntVec key;
                key.reserve(2 + a_ + t.y.size());
                key.push_back(static_cast<std::int64_t>(ci));
                for (auto s : signs) key.push_back(s);
                for (int i = 0; i < a_; ++i) key.push_back(t.r[i] - t.l[i]);
                for (int j = 0; j < n1; ++j) key[1 + signs.size() + assign[j]] += x_[j];
                key.insert(key.end(), t.y.begin(), t.y.end());
                auto m = memo_.find(key);
                if (m == memo_.end()) {
                    IntVec targets(key.begin() + 1 + signs.size(), key.begin() + 1 + signs.size() + a_);
                    m = memo_.emplace(key, weighted_partition(core_flow_system(core, targets, t.y))).first;
                }
                res.value += m->second.value;
                res.diagram_count += m->second.positive;
                int j = 0;
                while (j < n1 && ++assign[j] == a_) assign[j++] = 0;
                if (j == n1) break;
            }
        }
        return res;
    }

private:
    const PolygonShape& shape_;
    int g_;
    IntVec x_;
    int a_;
    std::map<std::vector<int>, std::vector<SkeletonCore>> cores_;
    std::map<IntVec, PartitionSum> memo_;
};

InvariantResult run_tasks(const PolygonShape& shape, int g, const IntVec& x, const std::vector<Task>& tasks,
                          const InvariantOptions& options) {
    InvariantResult total;
    int threads = std::max(1, options.threads);
    if (options.on_diagram || threads == 1 || tasks.size() < 2) {
        ConnectedSum worker(shape, g, x);
        for (const auto& t : tasks) {
            auto r = worker.run(t, options.on_diagram);
            total.value += r.value;
            total.diagram_count += r.diagram_count;
        }
        return total;
    }
    threads = std::min<int>(threads, static_cast<int>(tasks.size()));
    std::vector<InvariantResult> partial(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            ConnectedSum worker(shape, g, x);
            for (std::size_t i = w; i < tasks.size(); i += threads) {
                auto r = worker.run(tasks[i], nullptr);
                partial[w].value += r.value;
                partial[w].diagram_count += r.diagram_count;
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& p : partial) {
        total.value += p.value;
        total.diagram_count += p.diagram_count;
    }
    return total;
}

}  // namespace

InvariantResult function_F_detailed(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y,
                                    const InvariantOptions& options) {
    shape.validate();
    if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
    check_lambda(shape, DivergenceData{x, y});
    std::vector<Task> tasks;
    auto ys = multiset_permutations(y);
    for (const auto& [r, l] : boundary_arrangements(shape))
        for (const auto& yo : ys) tasks.push_back({r, l, yo});
    return run_tasks(shape, g, x, tasks, options);
}

Int function_F(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y) {
    return function_F_detailed(shape, g, x, y).value;
}

InvariantResult arrangement_term(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y,
                                 const IntVec& r, const IntVec& l) {
    shape.validate();
    check_lambda(shape, DivergenceData{x, y});
    std::vector<Task> tasks;
    for (const auto& yo : multiset_permutations(y)) tasks.push_back({r, l, yo});
    return run_tasks(shape, g, x, tasks, {});
}

InvariantResult connected_invariant(const Polygon& polygon, int g, const DivergenceData& data,
                                    const InvariantOptions& options) {
    check_degrees(polygon, data);
    return function_F_detailed(polygon.shape, g, data.x, data.y, options);
}

}  // namespace tropogw
