#include "core/fock.hpp"

#include <algorithm>
#include <functional>

namespace tropogw {

Rat commutator(const Generator& left, const Generator& right, bool state_contractions) {
    if (left.kind == right.kind) return 0;
    if (left.index != -right.index) return 0;
    if (!state_contractions && left.flavor != Flavor::Operator && right.flavor != Flavor::Operator &&
        left.flavor != right.flavor)
        return 0;
    // [a_n, b_{-n}] = n and [b_m, a_{-m}] = -[a_{-m}, b_m] = m.
    const std::int32_t n = left.kind == GenKind::A ? left.index : right.index;
    return left.kind == GenKind::A ? Rat(n) : Rat(-n);
}

bool OperatorMonomial::normally_ordered() const {
    bool seen_annihilator = false;
    for (const auto& g : gens) {
        if (g.creator() && seen_annihilator) return false;
        if (!g.creator()) seen_annihilator = true;
    }
    return true;
}

namespace {

std::vector<Generator> canonical_word(std::vector<Generator> gens) {
    auto mid = std::stable_partition(gens.begin(), gens.end(), [](const Generator& g) { return g.creator(); });
    std::sort(gens.begin(), mid);
    std::sort(mid, gens.end());
    return gens;
}

}  // namespace

void OperatorSum::add(const OperatorMonomial& m) {
    if (m.coefficient == 0) return;
    for (const auto& g : m.gens)
        if (g.index == 0) return;  // a_0 = b_0 = 0
    auto key = std::make_pair(m.normally_ordered() ? canonical_word(m.gens) : m.gens, m.u_exponent);
    auto& c = terms_[key];
    c += m.coefficient;
    if (c == 0) terms_.erase(key);
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
    for (const auto& m : other.monomials()) add(m);
    return *this;
}

OperatorSum OperatorSum::operator*(const OperatorSum& other) const {
    OperatorSum out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : other.terms_) {
            OperatorMonomial m;
            m.gens = k1.first;
            m.gens.insert(m.gens.end(), k2.first.begin(), k2.first.end());
            m.u_exponent = k1.second + k2.second;
            m.coefficient = c1 * c2;
            out.add(m);
        }
    return out;
}

std::vector<OperatorMonomial> OperatorSum::monomials() const {
    std::vector<OperatorMonomial> out;
    for (const auto& [k, c] : terms_) out.push_back({k.first, k.second, c});
    return out;
}

Rat OperatorSum::constant_term() const {
    Rat s = 0;
    for (const auto& [k, c] : terms_)
        if (k.first.empty()) s += c;
    return s;
}

OperatorSum normal_order(const OperatorMonomial& m, bool state_contractions) {
    // Terms kept as (creators, annihilators); appending a creator X to C·A
    // gives (C X)·A + sum_i [A_i, X] C·(A without A_i).
    struct Term {
        std::vector<Generator> cre, ann;
        Rat coef;
    };
    std::vector<Term> cur{{{}, {}, m.coefficient}};
    for (const auto& x : m.gens) {
        if (x.index == 0) return {};
        std::vector<Term> next;
        for (auto& t : cur) {
            if (!x.creator()) {
                t.ann.push_back(x);
                next.push_back(std::move(t));
                continue;
            }
            for (std::size_t i = 0; i < t.ann.size(); ++i) {
                Rat c = commutator(t.ann[i], x, state_contractions);
                if (c == 0) continue;
                Term r{t.cre, t.ann, t.coef * c};
                r.ann.erase(r.ann.begin() + static_cast<long>(i));
                next.push_back(std::move(r));
            }
            t.cre.push_back(x);
            next.push_back(std::move(t));
        }
        cur = std::move(next);
    }
    OperatorSum out;
    for (auto& t : cur) {
        OperatorMonomial r;
        r.gens = t.cre;
        r.gens.insert(r.gens.end(), t.ann.begin(), t.ann.end());
        r.u_exponent = m.u_exponent;
        r.coefficient = t.coef;
        out.add(r);
    }
    return out;
}

OperatorSum normal_order(const OperatorSum& s, bool state_contractions) {
    OperatorSum out;
    for (const auto& m : s.monomials()) out += normal_order(m, state_contractions);
    return out;
}

namespace {

void partitions_upto(std::int64_t max_sum, std::int64_t max_part, IntVec& cur,
                     std::vector<IntVec>& out) {
    out.push_back(cur);
    for (std::int64_t p = std::min(max_part, max_sum); p >= 1; --p) {
        cur.push_back(p);
        partitions_upto(max_sum - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

OperatorSum truncated_M_c(std::int64_t c, std::int64_t E) {
    OperatorSum out;
    std::vector<IntVec> parts;
    IntVec cur;
    partitions_upto(E, E, cur, parts);
    for (const auto& pos : parts)
        for (const auto& neg : parts) {
            if (pos.empty() && neg.empty()) continue;
            if (sum_of(pos) - sum_of(neg) != c) continue;
            OperatorMonomial m;
            for (auto n : neg) m.gens.push_back({GenKind::A, static_cast<std::int32_t>(-n)});
            for (auto p : pos) m.gens.push_back({GenKind::A, static_cast<std::int32_t>(p)});
            m.u_exponent = -1 + static_cast<int>(neg.size());
            m.coefficient = Rat(1) / Rat(automorphism_count(pos) * automorphism_count(neg));
            out.add(m);
        }
    return out;
}

OperatorSum truncated_M(std::int64_t E) {
    OperatorSum out;
    for (std::int64_t m = 1; m <= E; ++m) {
        OperatorMonomial mono;
        mono.gens = {{GenKind::B, static_cast<std::int32_t>(-m)}, {GenKind::B, static_cast<std::int32_t>(m)}};
        mono.u_exponent = 0;
        out.add(mono);
    }
    return out;
}

OperatorMonomial ket_word(const FockState& s, Flavor f) {
    OperatorMonomial m;
    for (auto v : s.mu) m.gens.push_back({GenKind::A, static_cast<std::int32_t>(-v), f});
    for (auto v : s.nu) m.gens.push_back({GenKind::B, static_cast<std::int32_t>(-v), f});
    m.coefficient = Rat(1) / Rat(automorphism_count(s.mu) * automorphism_count(s.nu));
    return m;
}

OperatorMonomial bra_word(const FockState& s, Flavor f) {
    OperatorMonomial m;
    for (auto v : s.mu) m.gens.push_back({GenKind::A, static_cast<std::int32_t>(v), f});
    for (auto v : s.nu) m.gens.push_back({GenKind::B, static_cast<std::int32_t>(v), f});
    m.coefficient = Rat(1) / Rat(automorphism_count(s.mu) * automorphism_count(s.nu));
    return m;
}

Rat inner_product_formula(const FockState& left, const FockState& right) {
    auto sorted = [](IntVec v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(left.mu) != sorted(right.nu) || sorted(left.nu) != sorted(right.mu)) return 0;
    Int prod = 1;
    for (auto v : left.mu) prod *= static_cast<long>(v);
    for (auto v : left.nu) prod *= static_cast<long>(v);
    return Rat(prod) / Rat(automorphism_count(left.mu) * automorphism_count(left.nu));
}

// ---------------------------------------------------------------------------
// Normal-ordering route.

void Covector::apply(const OperatorMonomial& word, bool state_contractions) {
    OperatorSum s(word);
    apply(s, state_contractions);
}

void Covector::apply(const OperatorSum& factor, bool state_contractions) {
    std::map<std::pair<std::vector<Generator>, int>, Rat> next;
    const auto monos = factor.monomials();
    for (const auto& [key, coef] : terms_) {
        for (const auto& m : monos) {
            // Quick rejection: every creator needs a partner among the
            // annihilators already present.
            std::size_t creators = 0;
            for (const auto& g : m.gens) creators += g.creator();
            if (creators > key.first.size()) continue;
            // Multiply the annihilator word by m one generator at a time,
            // dropping everything that keeps a creator.
            std::vector<std::pair<std::vector<Generator>, Rat>> cur{{key.first, coef * m.coefficient}};
            for (const auto& x : m.gens) {
                std::vector<std::pair<std::vector<Generator>, Rat>> nx;
                for (auto& [ann, c] : cur) {
                    if (!x.creator()) {
                        ann.push_back(x);
                        nx.emplace_back(std::move(ann), c);
                        continue;
                    }
                    for (std::size_t i = 0; i < ann.size(); ++i) {
                        Rat v = commutator(ann[i], x, state_contractions);
                        if (v == 0) continue;
                        auto rest = ann;
                        rest.erase(rest.begin() + static_cast<long>(i));
                        nx.emplace_back(std::move(rest), c * v);
                    }
                }
                cur = std::move(nx);
                if (cur.empty()) break;
            }
            for (auto& [ann, c] : cur) {
                std::sort(ann.begin(), ann.end());
                auto& slot = next[{ann, key.second + m.u_exponent}];
                slot += c;
            }
        }
    }
    terms_.clear();
    for (auto& [k, c] : next)
        if (c != 0) terms_.emplace(k, c);
}

Covector& Covector::operator+=(const Covector& other) {
    for (const auto& [k, c] : other.terms_) {
        auto& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

Laurent Covector::finish() const {
    Laurent out;
    for (const auto& [k, c] : terms_)
        if (k.first.empty() && c != 0) out[k.second] += c;
    return out;
}

// ---------------------------------------------------------------------------
// Feynman route: choose a monomial in each factor; every normally ordered
// monomial is one vertex, other words are split into single-generator
// vertices.  A diagram pairs each creator with an annihilator of an earlier
// vertex; the weight is the product of the pairings' brackets.

namespace {

struct OpenHalf {
    Generator g;
    int vertex;
};

void feynman_factor(const std::vector<std::vector<OperatorMonomial>>& factors, std::size_t fi,
                    std::vector<OpenHalf>& open, int next_vertex, const Rat& weight, int u, Laurent& out,
                    bool state_contractions);

void feynman_vertices(const std::vector<std::vector<OperatorMonomial>>& factors, std::size_t fi,
                      const std::vector<std::vector<Generator>>& vertices, std::size_t vi, std::size_t gi,
                      std::vector<OpenHalf>& open, int vertex_id, const Rat& weight, int u, Laurent& out,
                      bool state_contractions) {
    if (vi == vertices.size()) {
        feynman_factor(factors, fi + 1, open, vertex_id, weight, u, out, state_contractions);
        return;
    }
    const auto& vert = vertices[vi];
    if (gi == vert.size()) {
        feynman_vertices(factors, fi, vertices, vi + 1, 0, open, vertex_id + 1, weight, u, out, state_contractions);
        return;
    }
    const Generator& g = vert[gi];
    if (!g.creator()) {
        open.push_back({g, vertex_id});
        feynman_vertices(factors, fi, vertices, vi, gi + 1, open, vertex_id, weight, u, out, state_contractions);
        open.pop_back();
        return;
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
        if (open[i].vertex == vertex_id) continue;  // no self-contraction inside a vertex
        Rat v = commutator(open[i].g, g, state_contractions);
        if (v == 0) continue;
        OpenHalf saved = open[i];
        open.erase(open.begin() + static_cast<long>(i));
        feynman_vertices(factors, fi, vertices, vi, gi + 1, open, vertex_id, weight * v, u, out, state_contractions);
        open.insert(open.begin() + static_cast<long>(i), saved);
    }
}

void feynman_factor(const std::vector<std::vector<OperatorMonomial>>& factors, std::size_t fi,
                    std::vector<OpenHalf>& open, int next_vertex, const Rat& weight, int u, Laurent& out,
                    bool state_contractions) {
    if (fi == factors.size()) {
        if (open.empty()) out[u] += weight;
        return;
    }
    for (const auto& m : factors[fi]) {
        std::vector<std::vector<Generator>> vertices;
        if (m.normally_ordered()) {
            vertices.push_back(m.gens);
        } else {
            for (const auto& g : m.gens) vertices.push_back({g});
        }
        feynman_vertices(factors, fi, vertices, 0, 0, open, next_vertex, weight * m.coefficient, u + m.u_exponent, out,
                         state_contractions);
    }
}

void clean(Laurent& l) {
    for (auto it = l.begin(); it != l.end();)
        it = it->second == 0 ? l.erase(it) : std::next(it);
}

}  // namespace

Laurent vacuum_expectation(const std::vector<OperatorSum>& factors, Route route, bool state_contractions) {
    Laurent out;
    if (route == Route::Feynman) {
        std::vector<std::vector<OperatorMonomial>> f;
        for (const auto& s : factors) f.push_back(s.monomials());
        std::vector<OpenHalf> open;
        feynman_factor(f, 0, open, 0, Rat(1), 0, out, state_contractions);
    } else {
        Covector cv;
        for (const auto& s : factors) cv.apply(s, state_contractions);
        out = cv.finish();
    }
    clean(out);
    return out;
}

Laurent vacuum_expectation(const FockState& out_state, const std::vector<OperatorSum>& ops, const FockState& in,
                           Route route, bool state_contractions) {
    std::vector<OperatorSum> factors;
    factors.emplace_back(bra_word(out_state));
    factors.insert(factors.end(), ops.begin(), ops.end());
    factors.emplace_back(ket_word(in));
    return vacuum_expectation(factors, route, state_contractions);
}

Rat literal_vacuum_expectation(const std::vector<OperatorMonomial>& words) {
    OperatorMonomial all;
    for (const auto& w : words) {
        all.gens.insert(all.gens.end(), w.gens.begin(), w.gens.end());
        all.u_exponent += w.u_exponent;
        all.coefficient *= w.coefficient;
    }
    return normal_order(all).constant_term();
}

}  // namespace tropogw
