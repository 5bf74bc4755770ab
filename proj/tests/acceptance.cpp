// Acceptance harness.  `acceptance --criterion N` runs one criterion and
// prints exactly one line starting with PASS or FAIL; without arguments all
// criteria run in order.  The exit status is nonzero when any run criterion
// fails.

#include "core/chambers.hpp"
#include "core/diagrams.hpp"
#include "core/examples.hpp"
#include "core/fitting.hpp"
#include "core/fock.hpp"
#include "core/invariants.hpp"
#include "core/matrix_element.hpp"
#include "core/polynomials.hpp"
#include "core/thickened.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace tropogw;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int worker_threads() { return static_cast<int>(std::max(2u, std::thread::hardware_concurrency())); }

std::string fmt(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// ---------------------------------------------------------------------------
// Shared instance lists (criterion 8 replays the instances of 1-4).

struct FInstance {
    PolygonShape shape;
    int g;
    IntVec x, y;
};

std::vector<FInstance> criterion2_instances(std::vector<std::string>* skipped = nullptr) {
    std::vector<FInstance> out;
    for (std::int64_t k : {1, 2, 3})
        for (int g : {0, 1})
            for (const auto& row : reference_table()) {
                auto p = chamber_representative(k, row.label);
                if (!p) {
                    if (skipped && g == 0) skipped->push_back(row.label + "@k=" + std::to_string(k));
                    continue;
                }
                out.push_back({two_floor_shape(k), g, {(*p)[0], (*p)[1]}, {(*p)[2]}});
            }
    return out;
}

// Random small configurations for the piecewise polynomiality check.
std::vector<FitConfig> criterion3_configs() {
    std::mt19937_64 rng(20240611);
    std::vector<FitConfig> out;
    std::uniform_int_distribution<int> coin(0, 1), slope(-2, 2), val(-6, 6), n1d(0, 3);
    int attempts = 0;
    while (out.size() < 4 && attempts < 10000) {
        ++attempts;
        FitConfig c;
        const int a = 1 + coin(rng);
        c.g = coin(rng);
        // One or two distinct slopes per side.
        auto side = [&](bool right) {
            IntVec cs, ds;
            int parts = (a == 2 && coin(rng)) ? 2 : 1;
            std::set<std::int64_t> s;
            while (static_cast<int>(s.size()) < parts) s.insert(slope(rng));
            cs.assign(s.begin(), s.end());
            if (right) std::reverse(cs.begin(), cs.end());
            ds = parts == 1 ? IntVec{a} : IntVec{1, 1};
            return std::make_pair(cs, ds);
        };
        auto [cr, dr] = side(true);
        auto [cl, dl] = side(false);
        c.shape = PolygonShape{cr, cl, dr, dl};
        const int n1 = n1d(rng);
        const int n2 = std::uniform_int_distribution<int>(0, 3 - n1)(rng);
        if (n1 + n2 < 2) continue;
        IntVec pt;
        for (int i = 0; i < n1 + n2; ++i) pt.push_back(val(rng));
        std::int64_t s = 0;
        for (int i = 0; i + 1 < n1 + n2; ++i) s += pt[i];
        pt.back() = -c.shape.lambda_constant() - s;
        c.x.assign(pt.begin(), pt.begin() + n1);
        c.y.assign(pt.begin() + n1, pt.end());
        bool zero = false;
        for (auto v : pt) zero = zero || v == 0 || std::abs(v) > 9;
        if (zero) continue;
        try {
            chamber_signature(c.shape, c.x, c.y);
        } catch (const Error&) {
            continue;
        }
        c.radius = 10;
        c.seed = static_cast<std::uint64_t>(attempts);
        c.threads = worker_threads();
        // The chamber must hold enough lattice points; thin chambers are
        // redrawn.
        try {
            auto arr = walls(c.shape, n1, n2);
            const int D = std::max(0, chamber_degree_bound(c.shape, c.g, c.y.size()));
            const std::size_t need = monomials_upto(n1 + n2 - 1, D).size() + c.extra + c.holdout;
            sample_chamber(arr, pt, need, c.radius, c.seed);
        } catch (const Error&) {
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<FitConfig> criterion4_configs() {
    std::vector<FitConfig> out;
    auto add = [&](PolygonShape s, int g, IntVec x, IntVec y, std::int64_t radius) {
        FitConfig c;
        c.shape = std::move(s);
        c.g = g;
        c.x = std::move(x);
        c.y = std::move(y);
        c.extended = true;
        c.radius = radius;
        c.threads = worker_threads();
        out.push_back(c);
    };
    // Lambda: sum x + sum y + sum d_r c_r - sum d_l c_l = 0.
    add({{3, 1}, {-1}, {1, 1}, {2}}, 0, {5, 3}, {-14}, 4);
    add({{2}, {-1}, {1}, {1}}, 0, {2, 1}, {-6}, 4);
    add({{2}, {-1}, {2}, {2}}, 0, {3}, {-9}, 4);
    add({{3}, {-1}, {2}, {2}}, 1, {5}, {-13}, 8);
    return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Stopwatch sw;
    auto w = sixty_four_instance();
    auto res = connected_invariant(w.polygon, w.g, w.data);
    const double t = sw.seconds();
    std::ostringstream d;
    d << "connected_invariant = " << res.value << " (expected 64), " << res.diagram_count << " weighted diagrams";
    auto [Dr, Dl] = boundary_multisets(w.polygon.shape);
    d << "; per arrangement:";
    for (const auto& [r, l] : boundary_arrangements(w.polygon.shape))
        d << " r=" << fmt(r) << " l=" << fmt(l) << " -> "
          << arrangement_term(w.polygon.shape, w.g, w.data.x, w.data.y, r, l).value;
    d << "; " << t << " s (budget 1 s)";
    return {res.value == 64 && t < 1.0, d.str()};
}

Outcome criterion2() {
    Stopwatch sw;
    std::map<std::string, int> checked, failed;
    std::ostringstream mism;
    for (std::int64_t k : {1, 2, 3})
        for (int g : {0, 1})
            for (const auto& row : reference_table()) {
                auto p = chamber_representative(k, row.label);
                if (!p) continue;
                ++checked[row.label];
                Int F = function_F(two_floor_shape(k), g, {(*p)[0], (*p)[1]}, {(*p)[2]});
                Int E = expansion_value(row, g, k, *p);
                if (F != E) {
                    ++failed[row.label];
                    mism << " " << row.label << "[k=" << k << ",g=" << g << " at " << fmt(*p) << ": F=" << F
                         << " table=" << E << "]";
                }
            }
    const double t = sw.seconds();
    std::vector<std::string> empty_rows, bad_rows;
    for (const auto& row : reference_table()) {
        if (!checked.count(row.label)) empty_rows.push_back(row.label);
        if (failed.count(row.label)) bad_rows.push_back(row.label);
    }
    std::ostringstream d;
    const int rows_ok = static_cast<int>(reference_table().size() - empty_rows.size() - bad_rows.size());
    d << rows_ok << "/10 rows reproduced";
    if (!empty_rows.empty()) {
        d << "; rows without any lattice point:";
        for (const auto& r : empty_rows) d << " " << r;
    }
    if (!bad_rows.empty()) d << "; mismatches:" << mism.str();
    d << "; " << t << " s (budget 30 s)";
    return {empty_rows.empty() && bad_rows.empty() && t < 30.0, d.str()};
}

Outcome criterion3() {
    Stopwatch sw;
    auto configs = criterion3_configs();
    std::ostringstream d;
    bool ok = configs.size() >= 3;
    int passed = 0;
    for (const auto& c : configs) {
        try {
            auto rep = fit_chamber(c);
            bool good = rep.holdout_ok();
            passed += good;
            ok = ok && good;
            d << " [a=" << c.shape.height() << " g=" << c.g << " x=" << fmt(c.x) << " y=" << fmt(c.y)
              << " D=" << rep.degree_bound << " samples=" << rep.fit_samples << " holdout "
              << rep.holdout_checked - rep.holdout_failures << "/" << rep.holdout_checked << "]";
        } catch (const Error& e) {
            ok = false;
            d << " [x=" << fmt(c.x) << " y=" << fmt(c.y) << " error " << error_code_name(e.code()) << ": " << e.what()
              << "]";
        }
    }
    const double t = sw.seconds();
    std::ostringstream head;
    head << passed << "/" << configs.size() << " configurations validated on held-out points;" << d.str() << "; " << t
         << " s (budget 120 s)";
    return {ok && t < 120.0, head.str()};
}

Outcome criterion4() {
    Stopwatch sw;
    bool ok = true, attained = false;
    std::ostringstream d;
    for (const auto& c : criterion4_configs()) {
        try {
            auto rep = fit_chamber(c);
            ok = ok && rep.parity.pass && rep.holdout_ok();
            attained = attained || (rep.parity.pass && rep.parity.attains);
            d << " [c=" << fmt(c.shape.c_r) << ";" << fmt(c.shape.c_l) << " g=" << c.g << " D=" << rep.degree_bound
              << " degree=" << rep.parity.degree << " parity=" << (rep.parity.parity_ok ? "ok" : "BAD")
              << " holdout=" << (rep.holdout_ok() ? "ok" : "BAD") << "]";
        } catch (const Error& e) {
            ok = false;
            d << " [error " << error_code_name(e.code()) << ": " << e.what() << "]";
        }
    }
    std::ostringstream head;
    head << "joint (x,y,c) fits:" << d.str() << "; degree attained: " << (attained ? "yes" : "no") << "; "
         << sw.seconds() << " s";
    return {ok && attained, head.str()};
}

// All multisets of nonzero integers with total absolute mass <= M.
void multisets(std::int64_t mass_left, std::int64_t max_abs, IntVec& cur, std::vector<IntVec>& out) {
    out.push_back(cur);
    for (std::int64_t m = std::min(mass_left, max_abs); m >= 1; --m)
        for (std::int64_t v : {m, -m}) {
            // Non-increasing in (|v|, sign) order to avoid repeats.
            if (!cur.empty()) {
                auto last = cur.back();
                if (std::abs(last) < m || (std::abs(last) == m && last < v)) continue;
            }
            cur.push_back(v);
            multisets(mass_left - m, m, cur, out);
            cur.pop_back();
        }
}

std::vector<PolygonShape> grid_shapes() {
    return {
        {{0}, {0}, {1}, {1}},         {{1}, {0}, {1}, {1}},      {{2}, {0}, {1}, {1}},
        {{1}, {-1}, {1}, {1}},        {{0}, {-1}, {1}, {1}},     two_floor_shape(1),
        two_floor_shape(2),           {{1}, {-1}, {2}, {2}},     {{1, 0}, {0}, {1, 1}, {2}},
        {{2}, {-1, 0}, {2}, {1, 1}},  {{0}, {0}, {2}, {2}},      {{1}, {0, 1}, {2}, {1, 1}},
    };
}

Outcome criterion5() {
    Stopwatch sw;
    std::vector<IntVec> sets;
    IntVec cur;
    multisets(6, 6, cur, sets);
    struct Job {
        PolygonShape shape;
        int g;
        IntVec x, y;
    };
    std::vector<Job> jobs;
    for (const auto& s : grid_shapes())
        for (const auto& x : sets)
            for (const auto& y : sets) {
                if (abs_mass(x) + abs_mass(y) > 6) continue;
                if (sum_of(x) + sum_of(y) + s.lambda_constant() != 0) continue;
                for (int g : {-1, 0, 1}) jobs.push_back({s, g, x, y});
            }
    std::atomic<std::size_t> next{0};
    std::atomic<int> mismatches{0}, nonzero{0};
    std::mutex mu;
    std::string first;
    auto work = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            const auto& j = jobs[i];
            Int me = matrix_element_invariant(j.shape, j.g, j.x, j.y);
            Int dis = disconnected_invariant(j.shape, j.g, j.x, j.y).value;
            if (dis != 0) ++nonzero;
            if (me != dis) {
                ++mismatches;
                std::lock_guard<std::mutex> lock(mu);
                if (first.empty())
                    first = "first mismatch c=" + fmt(j.shape.c_r) + ";" + fmt(j.shape.c_l) + " g=" +
                            std::to_string(j.g) + " x=" + fmt(j.x) + " y=" + fmt(j.y) + ": fock=" + me.get_str() +
                            " diagrams=" + dis.get_str();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < worker_threads(); ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    const double t = sw.seconds();
    std::ostringstream d;
    d << jobs.size() << " instances (" << grid_shapes().size() << " polygons with a <= 2, g in {-1,0,1}, end mass <= 6), "
      << nonzero << " nonzero, " << mismatches << " mismatches";
    if (!first.empty()) d << "; " << first;
    d << "; " << t << " s (budget 300 s)";
    return {mismatches == 0 && nonzero > 0 && t < 300.0, d.str()};
}

Outcome criterion6() {
    Stopwatch sw;
    std::size_t products = 0, mismatches = 0;
    std::string first;
    auto record = [&](bool same, const std::string& what) {
        ++products;
        if (!same) {
            ++mismatches;
            if (first.empty()) first = what;
        }
    };
    auto to_laurent = [](const Rat& r) {
        Laurent l;
        if (r != 0) l[0] = r;
        return l;
    };
    // Exhaustive words of single generators, each generator one factor.
    auto words = [&](int max_len, int max_index) {
        std::vector<Generator> alphabet;
        for (int n = -max_index; n <= max_index; ++n)
            if (n != 0)
                for (GenKind k : {GenKind::A, GenKind::B}) alphabet.push_back({k, n, Flavor::Operator});
        for (int len = 1; len <= max_len; ++len) {
            std::vector<std::size_t> idx(len, 0);
            while (true) {
                std::int64_t bal = 0;
                std::vector<OperatorSum> factors;
                OperatorMonomial whole;
                for (auto i : idx) {
                    bal += alphabet[i].index;
                    OperatorMonomial m;
                    m.gens = {alphabet[i]};
                    factors.emplace_back(m);
                    whole.gens.push_back(alphabet[i]);
                }
                // Unbalanced words vanish trivially; evaluate them anyway when short.
                if (bal == 0 || len <= 2) {
                    auto f = vacuum_expectation(factors, Route::Feynman);
                    auto n = vacuum_expectation(factors, Route::NormalOrdering);
                    auto l = to_laurent(literal_vacuum_expectation({whole}));
                    record(f == n && n == l, "word of length " + std::to_string(len));
                }
                std::size_t p = 0;
                while (p < idx.size() && ++idx[p] == alphabet.size()) idx[p++] = 0;
                if (p == idx.size()) break;
            }
        }
    };
    words(4, 5);
    const std::size_t short_words = products;
    {
        // Length 5 and 6 with |n| <= 2.
        std::vector<Generator> alphabet;
        for (int n : {-2, -1, 1, 2})
            for (GenKind k : {GenKind::A, GenKind::B}) alphabet.push_back({k, n, Flavor::Operator});
        for (int len = 5; len <= 6; ++len) {
            std::vector<std::size_t> idx(len, 0);
            while (true) {
                std::int64_t bal = 0;
                for (auto i : idx) bal += alphabet[i].index;
                if (bal == 0) {
                    std::vector<OperatorSum> factors;
                    OperatorMonomial whole;
                    for (auto i : idx) {
                        OperatorMonomial m;
                        m.gens = {alphabet[i]};
                        factors.emplace_back(m);
                        whole.gens.push_back(alphabet[i]);
                    }
                    auto f = vacuum_expectation(factors, Route::Feynman);
                    auto n = vacuum_expectation(factors, Route::NormalOrdering);
                    auto l = to_laurent(literal_vacuum_expectation({whole}));
                    record(f == n && n == l, "long word");
                }
                std::size_t p = 0;
                while (p < idx.size() && ++idx[p] == alphabet.size()) idx[p++] = 0;
                if (p == idx.size()) break;
            }
        }
    }
    const std::size_t word_products = products;
    // Products of truncated M_c and M with up to six factors and caps up to 5,
    // between vacua and between small states, with and without state
    // contractions.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> nf(1, 6), E(1, 5), pick(0, 1);
    const std::vector<std::pair<FockState, FockState>> states = {
        {{{}, {}}, {{}, {}}}, {{{1}, {}}, {{}, {1}}}, {{{}, {2}}, {{1, 1}, {}}}, {{{2}, {1}}, {{1}, {1}}}};
    for (int it = 0; it < 120; ++it) {
        const int n = nf(rng);
        const int cap = E(rng);
        std::vector<OperatorSum> factors;
        std::int64_t csum = 0;
        for (int f = 0; f < n; ++f) {
            if (pick(rng) == 0) {
                factors.push_back(truncated_M(cap));
            } else {
                std::uniform_int_distribution<int> c(-std::min(cap, 2), std::min(cap, 2));
                int cv = c(rng);
                csum += cv;
                factors.push_back(truncated_M_c(cv, cap));
            }
        }
        const auto& [out, in] = states[it % states.size()];
        for (bool sc : {false, true}) {
            auto f = vacuum_expectation(out, factors, in, Route::Feynman, sc);
            auto o = vacuum_expectation(out, factors, in, Route::NormalOrdering, sc);
            record(f == o, "operator product with " + std::to_string(n) + " factors, cap " + std::to_string(cap));
        }
    }
    std::ostringstream d;
    d << products << " products compared (" << short_words << " words of length <= 4 with |n| <= 5, "
      << word_products - short_words << " balanced words of length 5-6 with |n| <= 2, "
      << products - word_products << " M/M_c products with <= 6 factors and cap <= 5), " << mismatches
      << " mismatches";
    if (!first.empty()) d << "; first: " << first;
    d << "; " << sw.seconds() << " s";
    return {mismatches == 0, d.str()};
}

Outcome criterion7() {
    Stopwatch sw;
    std::map<int, int> passed_by_dim;
    int failures = 0, total = 0;
    std::string first;
    std::mt19937_64 rng(7);
    for (int a : {2, 3})
        for (int g : {0, 1, 2})
            for (int n2 : {0, 1}) {
                std::vector<int> signs;
                if (n2) signs = {-1};
                auto cores = enumerate_cores(a, g, n2, signs);
                // A few cores per family with targets that push flow from the
                // first black to the others.
                for (std::size_t ci = 0; ci < cores.size() && ci < 4; ++ci) {
                    IntVec y = n2 ? IntVec{-2} : IntVec{};
                    IntVec targets(a, 0);
                    targets[0] = 5 + static_cast<std::int64_t>(rng() % 3);
                    std::int64_t rest = -targets[0] - (n2 ? -2 : 0);
                    for (int i = 1; i + 1 < a; ++i) {
                        targets[i] = -1;
                        rest += 1;
                    }
                    targets[a - 1] = rest;
                    auto sys = core_flow_system(cores[ci], targets, y);
                    const int dim = polytope_dimension(sys);
                    if (dim != g) continue;
                    auto rep = ehrhart_extend_and_check(sys);
                    ++total;
                    if (rep.pass) {
                        ++passed_by_dim[dim];
                    } else {
                        ++failures;
                        if (first.empty()) first = cores[ci].canonical();
                    }
                }
            }
    std::ostringstream d;
    d << total << " skeleton flow polytopes checked, " << failures << " failures; passing by dimension:";
    for (int g : {0, 1, 2}) d << " dim " << g << ": " << passed_by_dim[g];
    if (!first.empty()) d << "; first failure " << first;
    d << "; " << sw.seconds() << " s";
    bool all_dims = passed_by_dim[0] > 0 && passed_by_dim[1] > 0 && passed_by_dim[2] > 0;
    return {failures == 0 && total >= 10 && all_dims, d.str()};
}

Outcome criterion8() {
    Stopwatch sw;
    std::vector<FInstance> inst;
    auto w = sixty_four_instance();
    inst.push_back({w.polygon.shape, w.g, w.data.x, w.data.y});
    for (auto& i : criterion2_instances()) inst.push_back(i);
    std::size_t fit_points = 0;
    for (const auto& configs : {criterion3_configs(), criterion4_configs()})
        for (const auto& c : configs) {
            FitReport rep;
            try {
                rep = fit_chamber(c);
            } catch (const Error&) {
                continue;  // reported by criteria 3 and 4
            }
            for (const auto& p : rep.points) {
                FInstance fi{c.shape, c.g, {}, {}};
                const std::size_t n1 = c.x.size(), n2 = c.y.size();
                fi.x.assign(p.begin(), p.begin() + n1);
                fi.y.assign(p.begin() + n1, p.begin() + n1 + n2);
                if (c.extended) {
                    for (std::size_t i = 0; i < fi.shape.c_r.size(); ++i) fi.shape.c_r[i] = p[n1 + n2 + i];
                    for (std::size_t j = 0; j < fi.shape.c_l.size(); ++j)
                        fi.shape.c_l[j] = p[n1 + n2 + fi.shape.c_r.size() + j];
                }
                inst.push_back(fi);
                ++fit_points;
            }
        }
    std::atomic<std::size_t> next{0};
    std::atomic<std::int64_t> diagrams{0}, violations{0}, sum_mismatch{0};
    std::mutex mu;
    std::string first;
    auto work = [&] {
        for (std::size_t i; (i = next++) < inst.size();) {
            const auto& in = inst[i];
            Int total = 0;
            InvariantOptions o;
            o.on_diagram = [&](const FloorDiagram& d) {
                ++diagrams;
                total += multiplicity(d);
                auto rep = structural_check(d, in.g);
                if (!rep.ok) {
                    ++violations;
                    std::lock_guard<std::mutex> lock(mu);
                    if (first.empty()) first = rep.clause;
                }
            };
            auto detailed = function_F_detailed(in.shape, in.g, in.x, in.y, o);
            if (detailed.value != total || function_F(in.shape, in.g, in.x, in.y) != total) ++sum_mismatch;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < worker_threads(); ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    // Thickened diagrams of the Fock comparison grid.
    std::int64_t thick = 0, thick_bad = 0;
    for (const auto& s : grid_shapes()) {
        std::vector<IntVec> sets;
        IntVec cur;
        multisets(4, 4, cur, sets);
        for (const auto& x : sets)
            for (const auto& y : sets) {
                if (abs_mass(x) + abs_mass(y) > 4 || sum_of(x) + sum_of(y) + s.lambda_constant() != 0) continue;
                for (int g : {-1, 0, 1})
                    enumerate_thickened(s, g, x, y, [&](const ThickenedDiagram& d) {
                        ++thick;
                        if (!thickened_valid(d) || thickened_genus(d) != g) ++thick_bad;
                    });
            }
    }
    std::ostringstream d;
    d << diagrams << " floor diagrams from " << inst.size() << " evaluations (criteria 1-4, " << fit_points
      << " fit points), " << violations << " structural violations, " << sum_mismatch
      << " multiplicity-sum mismatches; " << thick << " thickened diagrams (end mass <= 4), " << thick_bad
      << " invalid";
    if (!first.empty()) d << "; first violation: " << first;
    d << "; " << sw.seconds() << " s";
    return {violations == 0 && sum_mismatch == 0 && thick_bad == 0 && diagrams > 0, d.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
        {"golden value of the worked 64 example", criterion1},
        {"chamber table reproduction", criterion2},
        {"piecewise polynomiality on random chambers", criterion3},
        {"degree and parity of joint (x,y,c) fits", criterion4},
        {"Fock matrix element equals thickened diagram count", criterion5},
        {"Wick: Feynman pairings equal normal ordering", criterion6},
        {"weighted Ehrhart reciprocity on skeleton flow polytopes", criterion7},
        {"structural check of every emitted diagram", criterion8},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            which.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    if (which.empty())
        for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) which.push_back(i);
    bool all = true;
    for (int n : which) {
        if (n < 1 || n > static_cast<int>(criteria().size())) {
            std::cerr << "unknown criterion " << n << "\n";
            return 2;
        }
        const auto& [name, fn] = criteria()[n - 1];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << o.detail << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
