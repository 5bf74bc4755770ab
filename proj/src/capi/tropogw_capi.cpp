#include "tropogw/tropogw.h"

#include "core/commands.hpp"
#include "core/invariants.hpp"
#include "core/matrix_element.hpp"
#include "core/polynomials.hpp"
#include "core/thickened.hpp"

#include <cstring>
#include <new>
#include <string>

struct tgw_polygon {
    tropogw::Polygon polygon;
};

namespace {

thread_local std::string last_error;

tgw_status status_of(tropogw::ErrorCode c) {
    using tropogw::ErrorCode;
    switch (c) {
        case ErrorCode::OrderingViolation: return TGW_ORDERING_VIOLATION;
        case ErrorCode::LengthMismatch: return TGW_LENGTH_MISMATCH;
        case ErrorCode::DegeneratePolygon: return TGW_DEGENERATE_POLYGON;
        case ErrorCode::InvalidArgument: return TGW_INVALID_ARGUMENT;
        case ErrorCode::ZeroEntry: return TGW_ZERO_ENTRY;
        case ErrorCode::NotInLambda: return TGW_NOT_IN_LAMBDA;
        case ErrorCode::InconsistentDegrees: return TGW_INCONSISTENT_DEGREES;
        case ErrorCode::InfeasibleDegree: return TGW_INFEASIBLE_DEGREE;
        case ErrorCode::OnWall: return TGW_ON_WALL;
        case ErrorCode::InsufficientSamples: return TGW_INSUFFICIENT_SAMPLES;
        case ErrorCode::RankDeficient: return TGW_RANK_DEFICIENT;
        case ErrorCode::InconsistentSamples: return TGW_INCONSISTENT_SAMPLES;
        case ErrorCode::TruncationTooSmall: return TGW_TRUNCATION_TOO_SMALL;
        case ErrorCode::MassLimitExceeded: return TGW_MASS_LIMIT_EXCEEDED;
        case ErrorCode::Internal: return TGW_INTERNAL;
    }
    return TGW_INTERNAL;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// Runs `body`, translating exceptions to status codes.
template <class F>
tgw_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return TGW_OK;
    } catch (const tropogw::Error& e) {
        last_error = std::string(tropogw::error_code_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = std::string("internal: ") + e.what();
        return TGW_INTERNAL;
    } catch (...) {
        last_error = "internal: unknown exception";
        return TGW_INTERNAL;
    }
}

tropogw::IntVec vec(const int64_t* p, size_t n) {
    if (n && !p) throw tropogw::Error(tropogw::ErrorCode::InvalidArgument, "null array with nonzero length");
    return tropogw::IntVec(p, p + n);
}

void need(const void* p, const char* what) {
    if (!p) throw tropogw::Error(tropogw::ErrorCode::InvalidArgument, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* tgw_version(void) { return "1.0.0"; }

const char* tgw_status_name(tgw_status s) {
    switch (s) {
        case TGW_OK: return "Ok";
        case TGW_ORDERING_VIOLATION: return "OrderingViolation";
        case TGW_LENGTH_MISMATCH: return "LengthMismatch";
        case TGW_DEGENERATE_POLYGON: return "DegeneratePolygon";
        case TGW_INVALID_ARGUMENT: return "InvalidArgument";
        case TGW_ZERO_ENTRY: return "ZeroEntry";
        case TGW_NOT_IN_LAMBDA: return "NotInLambda";
        case TGW_INCONSISTENT_DEGREES: return "InconsistentDegrees";
        case TGW_INFEASIBLE_DEGREE: return "InfeasibleDegree";
        case TGW_ON_WALL: return "OnWall";
        case TGW_INSUFFICIENT_SAMPLES: return "InsufficientSamples";
        case TGW_RANK_DEFICIENT: return "RankDeficient";
        case TGW_INCONSISTENT_SAMPLES: return "InconsistentSamples";
        case TGW_TRUNCATION_TOO_SMALL: return "TruncationTooSmall";
        case TGW_MASS_LIMIT_EXCEEDED: return "MassLimitExceeded";
        case TGW_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* tgw_last_error(void) { return last_error.c_str(); }

void tgw_string_free(char* s) { std::free(s); }

tgw_status tgw_polygon_create(const int64_t* c_r, const int64_t* d_r, size_t n, const int64_t* c_l,
                              const int64_t* d_l, size_t m, int64_t d_t, tgw_polygon** out) {
    return guarded([&] {
        need(out, "output handle");
        *out = nullptr;
        auto P = tropogw::build_polygon(vec(c_r, n), vec(c_l, m), vec(d_r, n), vec(d_l, m), d_t);
        *out = new tgw_polygon{std::move(P)};
    });
}

void tgw_polygon_destroy(tgw_polygon* p) { delete p; }

tgw_status tgw_polygon_info(const tgw_polygon* p, int64_t* d_b, int64_t* a, int64_t* K) {
    return guarded([&] {
        need(p, "polygon");
        if (d_b) *d_b = p->polygon.d_b;
        if (a) *a = p->polygon.a;
        if (K) *K = p->polygon.shape.lambda_constant();
    });
}

tgw_status tgw_connected_invariant(const tgw_polygon* p, int g, const int64_t* x, size_t n1, const int64_t* y,
                                   size_t n2, int threads, char** value) {
    return guarded([&] {
        need(p, "polygon");
        need(value, "output string");
        tropogw::InvariantOptions o;
        o.threads = threads;
        auto r = tropogw::connected_invariant(p->polygon, g, {vec(x, n1), vec(y, n2)}, o);
        *value = dup(r.value.get_str());
    });
}

tgw_status tgw_function_f(const tgw_polygon* p, int g, const int64_t* x, size_t n1, const int64_t* y, size_t n2,
                          int threads, char** value) {
    return guarded([&] {
        need(p, "polygon");
        need(value, "output string");
        tropogw::check_lambda(p->polygon.shape, {vec(x, n1), vec(y, n2)});
        tropogw::InvariantOptions o;
        o.threads = threads;
        auto r = tropogw::function_F_detailed(p->polygon.shape, g, vec(x, n1), vec(y, n2), o);
        *value = dup(r.value.get_str());
    });
}

tgw_status tgw_disconnected_invariant(const tgw_polygon* p, int g, const int64_t* x, size_t n1, const int64_t* y,
                                      size_t n2, char** value) {
    return guarded([&] {
        need(p, "polygon");
        need(value, "output string");
        tropogw::check_degrees(p->polygon, {vec(x, n1), vec(y, n2)});
        auto r = tropogw::disconnected_invariant(p->polygon.shape, g, vec(x, n1), vec(y, n2));
        *value = dup(r.value.get_str());
    });
}

tgw_status tgw_matrix_element_invariant(const tgw_polygon* p, int g, const int64_t* x, size_t n1, const int64_t* y,
                                        size_t n2, char** value) {
    return guarded([&] {
        need(p, "polygon");
        need(value, "output string");
        tropogw::check_degrees(p->polygon, {vec(x, n1), vec(y, n2)});
        *value = dup(tropogw::matrix_element_invariant(p->polygon.shape, g, vec(x, n1), vec(y, n2)).get_str());
    });
}

tgw_status tgw_gamma(int g, int64_t w, char** value) {
    return guarded([&] {
        need(value, "output string");
        if (g < 0 || w < 0) throw tropogw::Error(tropogw::ErrorCode::InvalidArgument, "g and w must be nonnegative");
        *value = dup(tropogw::gamma(g, w).get_str());
    });
}

tgw_status tgw_gamma_shifted(int g, int64_t k, int64_t w, char** value) {
    return guarded([&] {
        need(value, "output string");
        if (g < 0) throw tropogw::Error(tropogw::ErrorCode::InvalidArgument, "g must be nonnegative");
        *value = dup(tropogw::gamma_shifted(g, k, w).get_str());
    });
}

tgw_status tgw_run_json(const char* command, const char* payload, int threads, int emit_diagrams, char** result) {
    return guarded([&] {
        need(command, "command");
        need(result, "output string");
        *result = nullptr;
        nlohmann::json p = nlohmann::json::object();
        if (payload && *payload) {
            try {
                p = nlohmann::json::parse(payload);
            } catch (const nlohmann::json::exception& e) {
                throw tropogw::Error(tropogw::ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
            }
        }
        tropogw::CommandOptions o;
        o.threads = threads > 0 ? threads : 1;
        o.emit_diagrams = emit_diagrams != 0;
        o.max_mass = tropogw::max_mass_from_environment();
        *result = dup(tropogw::run_command(command, p, o).dump());
    });
}

}  // extern "C"
