#include "core/polygon.hpp"

#include <algorithm>

namespace tropogw {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OrderingViolation: return "OrderingViolation";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroEntry: return "ZeroEntry";
        case ErrorCode::NotInLambda: return "NotInLambda";
        case ErrorCode::InconsistentDegrees: return "InconsistentDegrees";
        case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
        case ErrorCode::OnWall: return "OnWall";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::InconsistentSamples: return "InconsistentSamples";
        case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorCode::MassLimitExceeded: return "MassLimitExceeded";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::vector<IntVec> multiset_permutations(IntVec items) {
    std::sort(items.begin(), items.end());
    std::vector<IntVec> out;
    do {
        out.push_back(items);
    } while (std::next_permutation(items.begin(), items.end()));
    return out;
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int automorphism_count(const IntVec& items) {
    IntVec s = items;
    std::sort(s.begin(), s.end());
    Int r = 1;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        r *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return r;
}

std::int64_t PolygonShape::lambda_constant() const {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < c_r.size(); ++i) k += c_r[i] * d_r[i];
    for (std::size_t j = 0; j < c_l.size(); ++j) k -= c_l[j] * d_l[j];
    return k;
}

std::int64_t PolygonShape::height() const { return sum_of(d_r); }

void PolygonShape::validate() const {
    if (c_r.empty() || c_l.empty())
        throw Error(ErrorCode::LengthMismatch, "c_r and c_l must be nonempty");
    if (c_r.size() != d_r.size())
        throw Error(ErrorCode::LengthMismatch, "d_r must have the same length as c_r");
    if (c_l.size() != d_l.size())
        throw Error(ErrorCode::LengthMismatch, "d_l must have the same length as c_l");
    for (auto d : d_r)
        if (d <= 0) throw Error(ErrorCode::InvalidArgument, "d_r entries must be positive");
    for (auto d : d_l)
        if (d <= 0) throw Error(ErrorCode::InvalidArgument, "d_l entries must be positive");
    for (std::size_t i = 1; i < c_r.size(); ++i)
        if (!(c_r[i - 1] > c_r[i]))
            throw Error(ErrorCode::OrderingViolation, "c_r must be strictly decreasing");
    for (std::size_t j = 1; j < c_l.size(); ++j)
        if (!(c_l[j - 1] < c_l[j]))
            throw Error(ErrorCode::OrderingViolation, "c_l must be strictly increasing");
    if (sum_of(d_r) != sum_of(d_l))
        throw Error(ErrorCode::LengthMismatch, "sum of d_r must equal sum of d_l");
}

Polygon build_polygon(const IntVec& c_r, const IntVec& c_l, const IntVec& d_r,
                      const IntVec& d_l, std::int64_t d_t) {
    Polygon p;
    p.shape = PolygonShape{c_r, c_l, d_r, d_l};
    p.shape.validate();
    if (d_t <= 0) throw Error(ErrorCode::InvalidArgument, "d_t must be positive");
    p.d_t = d_t;
    p.a = p.shape.height();
    p.d_b = d_t + p.shape.lambda_constant();
    if (p.d_b <= 0)
        throw Error(ErrorCode::DegeneratePolygon,
                    "derived bottom length d_b = " + std::to_string(p.d_b) + " is not positive");
    return p;
}

std::pair<IntVec, IntVec> boundary_multisets(const PolygonShape& shape) {
    IntVec dr, dl;
    for (std::size_t i = 0; i < shape.c_r.size(); ++i)
        dr.insert(dr.end(), static_cast<std::size_t>(shape.d_r[i]), shape.c_r[i]);
    for (std::size_t j = 0; j < shape.c_l.size(); ++j)
        dl.insert(dl.end(), static_cast<std::size_t>(shape.d_l[j]), shape.c_l[j]);
    return {dr, dl};
}

std::vector<std::pair<IntVec, IntVec>> boundary_arrangements(const PolygonShape& shape) {
    auto [dr, dl] = boundary_multisets(shape);
    std::vector<std::pair<IntVec, IntVec>> out;
    auto rs = multiset_permutations(dr);
    auto ls = multiset_permutations(dl);
    for (const auto& r : rs)
        for (const auto& l : ls) out.emplace_back(r, l);
    return out;
}

}  // namespace tropogw
