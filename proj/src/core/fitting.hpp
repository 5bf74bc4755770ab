#pragma once

#include "core/chambers.hpp"
#include "core/polynomials.hpp"

namespace tropogw {

struct FitConfig {
    PolygonShape shape;
    int g = 0;
    IntVec x, y;              // anchor point; its chamber is fitted
    bool extended = false;    // also treat the slopes as variables
    std::size_t extra = 4;    // samples beyond the monomial count
    std::size_t holdout = 6;  // held-out validation points (at least 5 are required)
    std::int64_t radius = 8;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct FitReport {
    int degree_bound = 0;  // n2 + 3g + 2a - 2
    std::string signature;
    MultivariatePolynomial polynomial;
    std::size_t fit_samples = 0;
    std::size_t holdout_checked = 0;
    std::size_t holdout_failures = 0;
    ParityReport parity;       // joint parity in all chart variables
    bool xy_parity_ok = false;  // parity of the part not involving slopes, for information
    std::vector<IntVec> points;  // full coordinates of every evaluated point
    std::vector<Int> values;

    bool holdout_ok() const { return holdout_checked >= 5 && holdout_failures == 0; }
};

int chamber_degree_bound(const PolygonShape& shape, int g, std::size_t n2);

// Fits F on the anchor's chamber and validates on held-out points of the same
// chamber.  Throws OnWall, InsufficientSamples, RankDeficient or
// InconsistentSamples; a failed holdout is reported, not thrown.
FitReport fit_chamber(const FitConfig& config);

}  // namespace tropogw
