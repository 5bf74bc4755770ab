#include "core/polynomials.hpp"

#include <functional>
#include <sstream>

namespace tropogw {

int MultivariatePolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

Rat MultivariatePolynomial::evaluate(const std::vector<Rat>& point) const {
    Rat total = 0;
    for (const auto& [e, c] : terms) {
        Rat term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

Rat MultivariatePolynomial::evaluate(const IntVec& point) const {
    std::vector<Rat> p;
    for (auto v : point) p.emplace_back(static_cast<long>(v));
    return evaluate(p);
}

std::string MultivariatePolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool unit = a == 1;
        bool constant = true;
        for (int v : e) constant = constant && v == 0;
        if (!unit || constant) os << a.get_str();
        bool star = !unit || constant;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << (i < variables.size() ? variables[i] : "v" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

std::vector<std::vector<int>> monomials_upto(int nvars, int D) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    for (int d = 0; d <= D; ++d) {
        if (nvars == 0) {
            if (d == 0) out.push_back({});
            continue;
        }
        rec(0, d);
    }
    return out;
}

MultivariatePolynomial interpolate(const std::vector<IntVec>& points, const std::vector<Int>& values, int D,
                                   std::vector<std::string> variables) {
    if (points.size() != values.size()) throw Error(ErrorCode::InvalidArgument, "points and values differ in length");
    if (points.empty()) throw Error(ErrorCode::RankDeficient, "no samples");
    const int nv = static_cast<int>(points[0].size());
    auto monos = monomials_upto(nv, D);
    const std::size_t n = monos.size(), m = points.size();
    if (m < n) throw Error(ErrorCode::RankDeficient, "fewer samples than monomials");

    std::vector<std::vector<Int>> A(m, std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int v = 1;
            for (int k = 0; k < nv; ++k)
                for (int e = 0; e < monos[j][k]; ++e) v *= static_cast<long>(points[i][k]);
            A[i][j] = v;
        }
        A[i][n] = values[i];
    }
    // Bareiss elimination; every column must receive a pivot.
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < m && A[p][k] == 0) ++p;
        if (p == m) throw Error(ErrorCode::RankDeficient, "samples do not determine the coefficients");
        std::swap(A[p], A[k]);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                A[i][j] = A[k][k] * A[i][j] - A[i][k] * A[k][j];
                mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    for (std::size_t i = n; i < m; ++i)
        if (A[i][n] != 0)
            throw Error(ErrorCode::InconsistentSamples, "no polynomial of degree <= " + std::to_string(D) +
                                                            " fits the samples");
    std::vector<Rat> coef(n);
    for (std::size_t kk = n; kk-- > 0;) {
        Rat s = Rat(A[kk][n]);
        for (std::size_t j = kk + 1; j < n; ++j) s -= Rat(A[kk][j]) * coef[j];
        coef[kk] = s / Rat(A[kk][kk]);
    }
    MultivariatePolynomial poly;
    poly.variables = std::move(variables);
    for (std::size_t j = 0; j < n; ++j)
        if (coef[j] != 0) poly.terms[monos[j]] = coef[j];
    return poly;
}

Int gamma(int g, std::int64_t w) {
    if (g < 0) throw Error(ErrorCode::InvalidArgument, "g must be nonnegative");
    if (w < 0) throw Error(ErrorCode::InvalidArgument, "w must be nonnegative");
    // f[p][v]: compositions of v into p+1 positive parts.
    std::vector<Int> f(static_cast<std::size_t>(w) + 1, 0);
    for (std::int64_t v = 1; v <= w; ++v) f[v] = Int(static_cast<long>(v)) * static_cast<long>(v);
    for (int p = 1; p <= g; ++p) {
        std::vector<Int> nf(static_cast<std::size_t>(w) + 1, 0);
        for (std::int64_t v = 0; v <= w; ++v)
            for (std::int64_t j = 1; j < v; ++j) nf[v] += Int(static_cast<long>(j * j)) * f[v - j];
        f = std::move(nf);
    }
    return f[w];
}

Int gamma_shifted(int g, std::int64_t k, std::int64_t w) {
    std::int64_t s = w + k;
    return gamma(g, s < 0 ? -s : s);
}

ParityReport parity_degree_check(const MultivariatePolynomial& p, int D) {
    ParityReport r;
    r.expected = D;
    r.degree = p.total_degree();
    r.degree_ok = r.degree <= D;
    r.parity_ok = true;
    for (const auto& [e, c] : p.terms) {
        int s = 0;
        for (int v : e) s += v;
        if (((s - D) % 2 + 2) % 2 != 0) r.parity_ok = false;
    }
    r.attains = r.degree == D;
    r.pass = r.degree_ok && r.parity_ok;
    return r;
}

Rat lagrange_evaluate(const std::vector<Rat>& ts, const std::vector<Rat>& vs, const Rat& at) {
    Rat total = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rat term = vs[i];
        for (std::size_t j = 0; j < ts.size(); ++j)
            if (j != i) term *= (at - ts[j]) / (ts[i] - ts[j]);
        total += term;
    }
    return total;
}

ReciprocityReport ehrhart_extend_and_check(const FlowSystem& system) {
    ReciprocityReport r;
    r.dimension = polytope_dimension(system);
    if (r.dimension < 0) {
        r.pass = true;  // empty polytope: both sides vanish identically
        return r;
    }
    int weight_degree = 0;
    for (bool b : system.internal) weight_degree += b;
    r.degree_bound = r.dimension + weight_degree;
    std::vector<Rat> ts, vs;
    for (int t = 1; t <= r.degree_bound + 2; ++t) {
        ts.emplace_back(t);
        vs.emplace_back(dilated_sum(system, t));
    }
    // The extra sample must already lie on the polynomial.
    std::vector<Rat> ts0(ts.begin(), ts.end() - 1), vs0(vs.begin(), vs.end() - 1);
    bool consistent = lagrange_evaluate(ts0, vs0, ts.back()) == vs.back();
    bool ok = consistent;
    for (int t = 1; t <= 3; ++t) {
        Rat ext = lagrange_evaluate(ts0, vs0, Rat(-t));
        // f(-z) = (-1)^{|Y|} f(z) for the monomial weight.
        Rat rec = Rat(interior_sum(system, t));
        if ((r.dimension + weight_degree) % 2 != 0) rec = -rec;
        r.extended.push_back(ext);
        r.reciprocal.push_back(rec);
        if (ext != rec) ok = false;
    }
    r.pass = ok;
    return r;
}

}  // namespace tropogw
