#include "core/fitting.hpp"

#include "core/invariants.hpp"
#include "core/tangency.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <exception>
#include <thread>

namespace tropogw {

int chamber_degree_bound(const PolygonShape& shape, int g, std::size_t n2) {
    return static_cast<int>(n2) + 3 * g + 2 * static_cast<int>(shape.height()) - 2;
}

namespace {

// Split a full extended point into (shape with its slopes, x, y).
struct Decoded {
    PolygonShape shape;
    IntVec x, y;
};

Decoded decode(const FitConfig& cfg, const IntVec& full) {
    Decoded d;
    const std::size_t n1 = cfg.x.size(), n2 = cfg.y.size();
    d.shape = cfg.shape;
    d.x.assign(full.begin(), full.begin() + n1);
    d.y.assign(full.begin() + n1, full.begin() + n1 + n2);
    if (cfg.extended) {
        const std::size_t n = d.shape.c_r.size(), m = d.shape.c_l.size();
        for (std::size_t i = 0; i < n; ++i) d.shape.c_r[i] = full[n1 + n2 + i];
        for (std::size_t j = 0; j < m; ++j) d.shape.c_l[j] = full[n1 + n2 + n + j];
    }
    return d;
}

std::vector<Int> evaluate_all(const FitConfig& cfg, const std::vector<IntVec>& points) {
    std::vector<Int> out(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto work = [&] {
        try {
            for (std::size_t i; (i = next++) < points.size();) {
                auto d = decode(cfg, points[i]);
                out[i] = function_F(d.shape, cfg.g, d.x, d.y);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!failure) failure = std::current_exception();
        }
    };
    const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(points.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace

FitReport fit_chamber(const FitConfig& cfg) {
    if (cfg.holdout < 5) throw Error(ErrorCode::InvalidArgument, "at least five held-out points are required");
    const int n1 = static_cast<int>(cfg.x.size()), n2 = static_cast<int>(cfg.y.size());
    check_lambda(cfg.shape, DivergenceData{cfg.x, cfg.y});
    Arrangement arr = cfg.extended ? extended_walls(cfg.shape, n1, n2) : walls(cfg.shape, n1, n2);
    IntVec anchor = cfg.x;
    anchor.insert(anchor.end(), cfg.y.begin(), cfg.y.end());
    if (cfg.extended) {
        anchor.insert(anchor.end(), cfg.shape.c_r.begin(), cfg.shape.c_r.end());
        anchor.insert(anchor.end(), cfg.shape.c_l.begin(), cfg.shape.c_l.end());
    }

    FitReport rep;
    rep.degree_bound = chamber_degree_bound(cfg.shape, cfg.g, cfg.y.size());
    rep.signature = arr.signature(anchor);
    const auto names = arr.chart_names();
    const int D = std::max(rep.degree_bound, 0);
    const std::size_t basis = monomials_upto(static_cast<int>(names.size()), D).size();
    const std::size_t need = basis + cfg.extra;

    auto pts = sample_chamber(arr, anchor, need + cfg.holdout, cfg.radius, cfg.seed);
    auto vals = evaluate_all(cfg, pts);

    std::vector<IntVec> fit_pts;
    std::vector<Int> fit_vals;
    for (std::size_t i = 0; i < need; ++i) {
        fit_pts.push_back(arr.to_chart(pts[i]));
        fit_vals.push_back(vals[i]);
    }
    rep.polynomial = interpolate(fit_pts, fit_vals, D, names);
    rep.fit_samples = need;
    for (std::size_t i = need; i < pts.size(); ++i) {
        ++rep.holdout_checked;
        if (rep.polynomial.evaluate(arr.to_chart(pts[i])) != Rat(vals[i])) ++rep.holdout_failures;
    }
    rep.parity = parity_degree_check(rep.polynomial, rep.degree_bound);

    // Parity of the slope-free part: monomials with zero exponent in every
    // slope variable.
    rep.xy_parity_ok = true;
    const std::size_t xy_vars = static_cast<std::size_t>(n1 + n2 - 1);
    for (const auto& [exp, c] : rep.polynomial.terms) {
        bool slope_free = true;
        int deg = 0;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (i >= xy_vars && exp[i] != 0) slope_free = false;
            deg += exp[i];
        }
        if (slope_free && (deg - rep.degree_bound) % 2 != 0) rep.xy_parity_ok = false;
    }
    rep.points = std::move(pts);
    rep.values = std::move(vals);
    return rep;
}

}  // namespace tropogw
