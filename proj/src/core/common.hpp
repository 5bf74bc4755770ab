#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropogw {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<std::int64_t>;

// Every failure that callers can act on carries one of these codes.  The C API
// maps them to status values and the CLI maps validation codes to exit 2.
enum class ErrorCode {
    OrderingViolation,
    LengthMismatch,
    DegeneratePolygon,
    InvalidArgument,
    ZeroEntry,
    NotInLambda,
    InconsistentDegrees,
    InfeasibleDegree,
    OnWall,
    InsufficientSamples,
    RankDeficient,
    InconsistentSamples,
    TruncationTooSmall,
    MassLimitExceeded,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline std::int64_t sum_of(const IntVec& v) {
    std::int64_t s = 0;
    for (auto e : v) s += e;
    return s;
}

inline std::int64_t abs_mass(const IntVec& v) {
    std::int64_t s = 0;
    for (auto e : v) s += e < 0 ? -e : e;
    return s;
}

// Distinct arrangements of a multiset, in lexicographic order.
std::vector<IntVec> multiset_permutations(IntVec items);

// Product of factorials of value multiplicities, i.e. the size of the
// stabilizer of the tuple under permutations.
Int automorphism_count(const IntVec& items);

Int factorial(unsigned n);

}  // namespace tropogw
