#include "core/matrix_element.hpp"

#include "core/tangency.hpp"
#include "core/thickened.hpp"

#include <map>

namespace tropogw {

std::int64_t safe_energy_cap(const PolygonShape& shape, const IntVec& x, const IntVec& y) {
    std::int64_t best = 0;
    for (const auto& [r, l] : boundary_arrangements(shape)) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r[i] > l[i] ? r[i] - l[i] : l[i] - r[i];
        best = std::max(best, s);
    }
    std::int64_t top = 0, bottom = 0;
    for (const IntVec* v : {&x, &y})
        for (auto e : *v) (e > 0 ? top : bottom) += e > 0 ? e : -e;
    return std::max({top, bottom, best + abs_mass(x) + abs_mass(y)});
}

MatrixElementResult matrix_element(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y) {
    shape.validate();
    check_lambda(shape, DivergenceData{x, y});
    MatrixElementResult res;
    const IntVec xm = negative_part(x), xp = positive_part(x);
    const IntVec ym = negative_part(y), yp = positive_part(y);
    res.u_power = g - 1 + static_cast<int>(xm.size() + ym.size());
    res.energy_cap = safe_energy_cap(shape, x, y);
    const std::int64_t a = shape.height();
    const std::int64_t s = size_zero_count(a, g, y.size());
    if (s < 0) return res;
    for (auto v : x)
        if ((v < 0 ? -v : v) > res.energy_cap) throw Error(ErrorCode::TruncationTooSmall, "state index exceeds cap");

    const FockState bra{ym, xm}, ket{yp, xp};
    const OperatorSum M = truncated_M(res.energy_cap);
    std::map<std::int64_t, OperatorSum> Mc;

    for (const auto& [r, l] : boundary_arrangements(shape)) {
        std::vector<const OperatorSum*> vertex_ops;
        for (std::int64_t i = 0; i < a; ++i) {
            std::int64_t c = l[i] - r[i];
            auto it = Mc.find(c);
            if (it == Mc.end()) it = Mc.emplace(c, truncated_M_c(c, res.energy_cap)).first;
            vertex_ops.push_back(&it->second);
        }
        // dp[j] holds the covector after i M_c factors and j M factors.
        std::vector<Covector> dp(static_cast<std::size_t>(s) + 1);
        dp[0].apply(bra_word(bra), false);
        for (std::int64_t j = 1; j <= s; ++j) {
            dp[j] = dp[j - 1];
            dp[j].apply(M, false);
        }
        for (std::int64_t i = 1; i <= a; ++i) {
            std::vector<Covector> nx(static_cast<std::size_t>(s) + 1);
            for (std::int64_t j = 0; j <= s; ++j) {
                Covector from_vertex = dp[j];
                from_vertex.apply(*vertex_ops[i - 1], false);
                nx[j] = from_vertex;
                if (j > 0) {
                    Covector from_m = nx[j - 1];
                    from_m.apply(M, false);
                    nx[j] += from_m;
                }
            }
            dp = std::move(nx);
        }
        Covector last = dp[s];
        last.apply(ket_word(ket), false);
        for (const auto& [u, c] : last.finish()) res.raw[u] += c;
    }
    Int denom = 1;
    for (auto v : x) denom *= static_cast<long>(v < 0 ? -v : v);
    for (auto v : y) denom *= static_cast<long>(v < 0 ? -v : v);
    Rat pref = Rat(automorphism_count(x) * automorphism_count(y)) / Rat(denom);
    auto it = res.raw.find(res.u_power);
    if (it != res.raw.end()) res.value = pref * it->second;
    return res;
}

Int matrix_element_invariant(const PolygonShape& shape, int g, const IntVec& x, const IntVec& y) {
    auto r = matrix_element(shape, g, x, y);
    if (r.value.get_den() != 1)
        throw Error(ErrorCode::Internal, "matrix element is not an integer: " + r.value.get_str());
    return r.value.get_num();
}

}  // namespace tropogw
