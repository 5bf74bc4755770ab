#pragma once

#include "core/flows.hpp"

#include <map>
#include <string>

namespace tropogw {

struct MultivariatePolynomial {
    std::vector<std::string> variables;
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> nonzero coefficient

    int total_degree() const;  // -1 for the zero polynomial
    Rat evaluate(const std::vector<Rat>& point) const;
    Rat evaluate(const IntVec& point) const;
    std::string to_string() const;
};

// Exponent vectors of total degree <= D, graded then reverse-lexicographic.
std::vector<std::vector<int>> monomials_upto(int nvars, int D);

// Unique polynomial of degree <= D through the samples, solved by
// fraction-free elimination.  Throws RankDeficient when the samples do not
// determine it and InconsistentSamples when no such polynomial exists.
MultivariatePolynomial interpolate(const std::vector<IntVec>& points, const std::vector<Int>& values, int D,
                                   std::vector<std::string> variables = {});

// Sum over compositions of w into g+1 positive parts of the product of the
// squared parts.
Int gamma(int g, std::int64_t w);
Int gamma_shifted(int g, std::int64_t k, std::int64_t w);

struct ParityReport {
    bool pass = false;
    int degree = -1;
    int expected = 0;
    bool degree_ok = false;
    bool parity_ok = false;
    bool attains = false;
};

ParityReport parity_degree_check(const MultivariatePolynomial& p, int D);

// Univariate Lagrange evaluation through (ts[i], vs[i]).
Rat lagrange_evaluate(const std::vector<Rat>& ts, const std::vector<Rat>& vs, const Rat& at);

struct ReciprocityReport {
    bool pass = false;
    int dimension = -1;
    int degree_bound = 0;
    std::vector<Rat> extended;    // L(-t) for t = 1..3
    std::vector<Rat> reciprocal;  // (-1)^dim * sum over t P° of f(-z)
};

// Fit L(t) = sum over tP of prod_{internal} w_e from t = 1..deg+2 and check
// L(-t) = (-1)^dim sum_{z in tP°} f(-z) for t = 1..3.
ReciprocityReport ehrhart_extend_and_check(const FlowSystem& system);

}  // namespace tropogw
