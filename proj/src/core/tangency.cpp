#include "core/tangency.hpp"

#include <algorithm>
#include <functional>

namespace tropogw {

void check_lambda(const PolygonShape& shape, const DivergenceData& data) {
    for (auto v : data.x)
        if (v == 0) throw Error(ErrorCode::ZeroEntry, "x entries must be nonzero");
    for (auto v : data.y)
        if (v == 0) throw Error(ErrorCode::ZeroEntry, "y entries must be nonzero");
    std::int64_t s = sum_of(data.x) + sum_of(data.y) + shape.lambda_constant();
    if (s != 0)
        throw Error(ErrorCode::NotInLambda,
                    "sum x + sum y + K = " + std::to_string(s) + ", expected 0");
}

void check_degrees(const Polygon& polygon, const DivergenceData& data) {
    check_lambda(polygon.shape, data);
    std::int64_t top = 0, bottom = 0;
    for (const IntVec* v : {&data.x, &data.y})
        for (auto e : *v) (e > 0 ? top : bottom) += e > 0 ? e : -e;
    if (top != polygon.d_t || bottom != polygon.d_b)
        throw Error(ErrorCode::InfeasibleDegree,
                    "tangency orders sum to (" + std::to_string(top) + ", " +
                        std::to_string(bottom) + ") but the polygon has (d_t, d_b) = (" +
                        std::to_string(polygon.d_t) + ", " + std::to_string(polygon.d_b) + ")");
}

MultiplicityVector to_multiplicity(const DivergenceData& data) {
    MultiplicityVector mv;
    for (auto v : data.x) ++(v < 0 ? mv.alpha[-v] : mv.alpha_tilde[v]);
    for (auto v : data.y) ++(v < 0 ? mv.beta[-v] : mv.beta_tilde[v]);
    return mv;
}

namespace {

void append(IntVec& out, const std::map<std::int64_t, std::int64_t>& counts, int sign) {
    for (const auto& [i, n] : counts) {
        if (i <= 0 || n < 0)
            throw Error(ErrorCode::InvalidArgument, "multiplicity keys must be positive, counts nonnegative");
        out.insert(out.end(), static_cast<std::size_t>(n), sign * i);
    }
}

std::int64_t weighted(const std::map<std::int64_t, std::int64_t>& m) {
    std::int64_t s = 0;
    for (const auto& [i, n] : m) s += i * n;
    return s;
}

}  // namespace

DivergenceData from_multiplicity(const MultiplicityVector& mv) {
    DivergenceData d;
    append(d.x, mv.alpha_tilde, 1);
    append(d.x, mv.alpha, -1);
    append(d.y, mv.beta_tilde, 1);
    append(d.y, mv.beta, -1);
    std::sort(d.x.begin(), d.x.end(), std::greater<>());
    std::sort(d.y.begin(), d.y.end(), std::greater<>());
    return d;
}

DivergenceData from_multiplicity(const MultiplicityVector& mv, const Polygon& polygon) {
    std::int64_t bottom = weighted(mv.alpha) + weighted(mv.beta);
    std::int64_t top = weighted(mv.alpha_tilde) + weighted(mv.beta_tilde);
    if (bottom != polygon.d_b || top != polygon.d_t)
        throw Error(ErrorCode::InconsistentDegrees,
                    "multiplicities give (top, bottom) = (" + std::to_string(top) + ", " +
                        std::to_string(bottom) + "), polygon has (" + std::to_string(polygon.d_t) +
                        ", " + std::to_string(polygon.d_b) + ")");
    return from_multiplicity(mv);
}

std::int64_t point_count(const Polygon& polygon, std::int64_t g, const MultiplicityVector& mv) {
    std::int64_t n2 = 0;
    for (const auto& [i, n] : mv.beta) n2 += n;
    for (const auto& [i, n] : mv.beta_tilde) n2 += n;
    return 2 * polygon.a + g + n2 - 1;
}

IntVec positive_part(const IntVec& v) {
    IntVec out;
    for (auto e : v)
        if (e > 0) out.push_back(e);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

IntVec negative_part(const IntVec& v) {
    IntVec out;
    for (auto e : v)
        if (e < 0) out.push_back(-e);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace tropogw
