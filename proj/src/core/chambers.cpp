#include "core/chambers.hpp"

#include "core/tangency.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace tropogw {

std::vector<std::string> Arrangement::chart_names() const {
    std::vector<std::string> out;
    for (int i = 0; i < static_cast<int>(full_names.size()); ++i)
        if (i != eliminated) out.push_back(full_names[i]);
    return out;
}

IntVec Arrangement::to_chart(const IntVec& full) const {
    IntVec out;
    for (int i = 0; i < static_cast<int>(full.size()); ++i)
        if (i != eliminated) out.push_back(full[i]);
    return out;
}

IntVec Arrangement::complete(const IntVec& chart) const {
    IntVec full;
    Int s = lambda0;
    std::size_t ci = 0;
    for (int i = 0; i < static_cast<int>(full_names.size()); ++i) {
        if (i == eliminated) {
            full.push_back(0);
            continue;
        }
        full.push_back(chart[ci]);
        s += lambda[i] * static_cast<long>(chart[ci]);
        ++ci;
    }
    full[eliminated] = -s.get_si();
    return full;
}

bool Arrangement::in_lambda(const IntVec& full) const {
    Int s = lambda0;
    for (std::size_t i = 0; i < full.size(); ++i) s += lambda[i] * static_cast<long>(full[i]);
    return s == 0;
}

Int Arrangement::evaluate(const Wall& w, const IntVec& chart) const {
    Int s = w.constant;
    for (std::size_t i = 0; i < chart.size(); ++i) s += w.coef[i] * static_cast<long>(chart[i]);
    return s;
}

bool Arrangement::try_signature(const IntVec& full, std::string& out) const {
    auto chart = to_chart(full);
    out.clear();
    for (const auto& w : walls) {
        int s = sgn(evaluate(w, chart));
        if (s == 0) return false;
        out.push_back(s > 0 ? '+' : '-');
    }
    return true;
}

std::string Arrangement::signature(const IntVec& full) const {
    if (!in_lambda(full)) throw Error(ErrorCode::NotInLambda, "point is not in Lambda");
    auto chart = to_chart(full);
    std::string out;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        int s = sgn(evaluate(walls[i], chart));
        if (s == 0)
            throw Error(ErrorCode::OnWall, "point lies on wall " + std::to_string(i) + ": " +
                                               walls[i].describe(chart_names()));
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

void Arrangement::add_form(const Wall& descriptor, const std::vector<Int>& full_coef, const Int& constant) {
    const Int ae = full_coef[eliminated];
    std::vector<Int> coef;
    for (int i = 0; i < static_cast<int>(full_coef.size()); ++i)
        if (i != eliminated) coef.push_back(full_coef[i] - ae * lambda[i]);
    Int c = constant - ae * lambda0;
    Int content = abs(c);
    bool has_var = false;
    for (const auto& v : coef) {
        if (v != 0) has_var = true;
        content = gcd(content, v);
    }
    if (!has_var) return;
    int sign = 0;
    for (const auto& v : coef)
        if (v != 0) {
            sign = sgn(v);
            break;
        }
    for (auto& v : coef) v = v * sign / content;
    c = c * sign / content;
    for (const auto& w : walls)
        if (w.coef == coef && w.constant == c) return;
    Wall w = descriptor;
    w.coef = std::move(coef);
    w.constant = c;
    walls.push_back(std::move(w));
}

namespace {

std::vector<std::string> base_names(int n1, int n2) {
    std::vector<std::string> names;
    for (int i = 1; i <= n1; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n2; ++j) names.push_back("y" + std::to_string(j));
    return names;
}

void sort_walls(Arrangement& arr) {
    std::stable_sort(arr.walls.begin(), arr.walls.end(), [](const Wall& a, const Wall& b) {
        if (a.coef != b.coef) return a.coef > b.coef;
        return a.constant < b.constant;
    });
}

// Enumerate every mixed (S, T, k, t) and equalizer descriptor, handing the
// full-variable form to `emit`.  `slope_vars` selects whether the slopes are
// coefficients of variables (extended) or contribute to the constant.
template <class Emit>
void for_each_candidate(const PolygonShape& shape, int n1, int n2, bool slope_vars, std::size_t nvars, Emit&& emit) {
    const std::size_t n = shape.c_r.size(), m = shape.c_l.size();
    std::vector<std::int64_t> kk(n, 0), tt(m, 0);
    for (std::uint64_t smask = 0; smask < (1ull << n1); ++smask)
        for (std::uint64_t tmask = 0; tmask < (1ull << n2); ++tmask) {
            std::fill(kk.begin(), kk.end(), 0);
            std::fill(tt.begin(), tt.end(), 0);
            while (true) {
                Wall w;
                std::vector<Int> coef(nvars, 0);
                Int constant = 0;
                for (int i = 0; i < n1; ++i)
                    if (smask >> i & 1) {
                        w.S.push_back(i);
                        coef[i] = 1;
                    }
                for (int j = 0; j < n2; ++j)
                    if (tmask >> j & 1) {
                        w.T.push_back(j);
                        coef[n1 + j] = 1;
                    }
                w.k = IntVec(kk.begin(), kk.end());
                w.t = IntVec(tt.begin(), tt.end());
                for (std::size_t i = 0; i < n; ++i) {
                    if (slope_vars)
                        coef[n1 + n2 + i] += static_cast<long>(kk[i]);
                    else
                        constant += Int(static_cast<long>(shape.c_r[i])) * static_cast<long>(kk[i]);
                }
                for (std::size_t j = 0; j < m; ++j) {
                    if (slope_vars)
                        coef[n1 + n2 + n + j] -= static_cast<long>(tt[j]);
                    else
                        constant -= Int(static_cast<long>(shape.c_l[j])) * static_cast<long>(tt[j]);
                }
                bool trivial = smask == 0 && tmask == 0 && std::all_of(kk.begin(), kk.end(), [](auto v) { return v == 0; }) &&
                               std::all_of(tt.begin(), tt.end(), [](auto v) { return v == 0; });
                if (!trivial) emit(w, coef, constant);
                // Odometer over k in [0, d_r] and t in [0, d_l].
                std::size_t p = 0;
                while (p < n + m) {
                    auto& slot = p < n ? kk[p] : tt[p - n];
                    auto cap = p < n ? shape.d_r[p] : shape.d_l[p - n];
                    if (++slot <= cap) break;
                    slot = 0;
                    ++p;
                }
                if (p == n + m) break;
            }
        }
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) {
            Wall w;
            w.kind = Wall::Kind::Equalizer;
            w.i = i;
            w.j = j;
            std::vector<Int> coef(nvars, 0);
            coef[n1 + i] = 1;
            coef[n1 + j] = -1;
            emit(w, coef, Int(0));
        }
}

}  // namespace

std::string Wall::describe(const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i] == 0) continue;
        if (!s.empty()) s += coef[i] > 0 ? " + " : " - ";
        else if (coef[i] < 0) s += "-";
        Int a = abs(coef[i]);
        if (a != 1) s += a.get_str() + "*";
        s += names[i];
    }
    if (constant != 0) s += (constant > 0 ? " + " : " - ") + Int(abs(constant)).get_str();
    return s + " = 0";
}

Arrangement walls(const PolygonShape& shape, int n1, int n2) {
    shape.validate();
    if (n1 + n2 < 1) throw Error(ErrorCode::InvalidArgument, "need at least one x or y coordinate");
    Arrangement arr;
    arr.full_names = base_names(n1, n2);
    const std::size_t nv = arr.full_names.size();
    arr.lambda.assign(nv, 1);
    arr.lambda0 = static_cast<long>(shape.lambda_constant());
    arr.eliminated = static_cast<int>(nv) - 1;
    for_each_candidate(shape, n1, n2, false, nv, [&](const Wall& w, const std::vector<Int>& c, const Int& k) {
        ++arr.raw_count;
        arr.add_form(w, c, k);
    });
    sort_walls(arr);
    return arr;
}

Arrangement extended_walls(const PolygonShape& shape, int n1, int n2) {
    shape.validate();
    if (n1 + n2 < 1) throw Error(ErrorCode::InvalidArgument, "need at least one x or y coordinate");
    Arrangement arr;
    arr.extended = true;
    arr.full_names = base_names(n1, n2);
    const std::size_t n = shape.c_r.size(), m = shape.c_l.size();
    for (std::size_t i = 1; i <= n; ++i) arr.full_names.push_back("cr" + std::to_string(i));
    for (std::size_t j = 1; j <= m; ++j) arr.full_names.push_back("cl" + std::to_string(j));
    const std::size_t nv = arr.full_names.size();
    arr.lambda.assign(nv, 1);
    for (std::size_t i = 0; i < n; ++i) arr.lambda[n1 + n2 + i] = static_cast<long>(shape.d_r[i]);
    for (std::size_t j = 0; j < m; ++j) arr.lambda[n1 + n2 + n + j] = -static_cast<long>(shape.d_l[j]);
    arr.lambda0 = 0;
    arr.eliminated = n1 + n2 - 1;
    for_each_candidate(shape, n1, n2, true, nv, [&](const Wall& w, const std::vector<Int>& c, const Int& k) {
        ++arr.raw_count;
        arr.add_form(w, c, k);
    });
    sort_walls(arr);
    // Strict slope orderings, oriented so that the admissible side is '+'.
    auto add_ordering = [&](std::size_t hi, std::size_t lo, int idx) {
        Wall w;
        w.kind = Wall::Kind::Ordering;
        w.i = idx;
        std::vector<Int> coef(nv, 0);
        coef[hi] = 1;
        coef[lo] = -1;
        const std::size_t before = arr.walls.size();
        arr.add_form(w, coef, Int(0));
        if (arr.walls.size() > before) {
            // add_form normalizes the sign; restore the "hi - lo" orientation.
            auto& added = arr.walls.back();
            std::size_t hi_chart = hi - (static_cast<int>(hi) > arr.eliminated ? 1 : 0);
            if (added.coef[hi_chart] < 0) {
                for (auto& v : added.coef) v = -v;
                added.constant = -added.constant;
            }
        }
    };
    for (std::size_t i = 0; i + 1 < n; ++i) add_ordering(n1 + n2 + i, n1 + n2 + i + 1, static_cast<int>(i));
    for (std::size_t j = 0; j + 1 < m; ++j)
        add_ordering(n1 + n2 + n + j + 1, n1 + n2 + n + j, static_cast<int>(n + j));
    return arr;
}

std::string chamber_signature(const PolygonShape& shape, const IntVec& x, const IntVec& y) {
    check_lambda(shape, DivergenceData{x, y});
    auto arr = walls(shape, static_cast<int>(x.size()), static_cast<int>(y.size()));
    IntVec full = x;
    full.insert(full.end(), y.begin(), y.end());
    return arr.signature(full);
}

std::string extended_signature(const PolygonShape& shape, const IntVec& x, const IntVec& y) {
    shape.validate();  // OrderingViolation for unordered slopes
    auto arr = extended_walls(shape, static_cast<int>(x.size()), static_cast<int>(y.size()));
    IntVec full = x;
    full.insert(full.end(), y.begin(), y.end());
    full.insert(full.end(), shape.c_r.begin(), shape.c_r.end());
    full.insert(full.end(), shape.c_l.begin(), shape.c_l.end());
    return arr.signature(full);
}

std::string named_label(const PolygonShape& shape, const IntVec& x, const IntVec& y) {
    const std::int64_t K = shape.lambda_constant();
    if (x.size() != 2 || y.size() != 1 || K <= 0) return "";
    std::string s;
    for (auto v : {x[0], x[1], y[0]}) {
        if (v > 0)
            s += '+';
        else if (v < -K)
            s += '-';
        else if (v > -K && v < 0)
            s += '0';
        else
            return "";  // on a wall
    }
    return s;
}

std::vector<IntVec> sample_chamber(const Arrangement& arr, const IntVec& anchor, std::size_t count,
                                   std::int64_t radius, std::uint64_t seed) {
    const std::string sig = arr.signature(anchor);
    const IntVec center = arr.to_chart(anchor);
    const std::size_t dim = center.size();
    std::vector<IntVec> out{anchor};
    std::set<IntVec> seen{center};
    double box = 1;
    for (std::size_t i = 0; i < dim; ++i) box *= static_cast<double>(2 * radius + 1);
    std::string s;
    if (box <= 200000) {
        std::vector<IntVec> found;
        IntVec off(dim, -radius);
        while (dim > 0) {
            IntVec p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = center[i] + off[i];
            if (!seen.count(p)) {
                IntVec full = arr.complete(p);
                if (arr.try_signature(full, s) && s == sig) found.push_back(full);
            }
            std::size_t i = 0;
            while (i < dim && ++off[i] > radius) off[i++] = -radius;
            if (i == dim) break;
        }
        std::mt19937_64 rng(seed);
        std::shuffle(found.begin(), found.end(), rng);
        for (auto& f : found) {
            if (out.size() >= count) break;
            out.push_back(std::move(f));
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
        std::size_t attempts = 0;
        while (out.size() < count && attempts < 400 * count + 10000) {
            ++attempts;
            IntVec p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = center[i] + dist(rng);
            if (!seen.insert(p).second) continue;
            IntVec full = arr.complete(p);
            if (arr.try_signature(full, s) && s == sig) out.push_back(full);
        }
    }
    if (out.size() < count)
        throw Error(ErrorCode::InsufficientSamples, "found " + std::to_string(out.size()) + " of " +
                                                        std::to_string(count) + " points within radius " +
                                                        std::to_string(radius));
    return out;
}

}  // namespace tropogw
