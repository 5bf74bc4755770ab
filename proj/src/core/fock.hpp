#pragma once

#include "core/common.hpp"

#include <compare>
#include <map>

namespace tropogw {

enum class GenKind : std::uint8_t { A = 0, B = 1 };

// Flavours tag where a generator came from.  Operators contract with
// everything; bra generators do not contract with ket generators when state
// contractions are disabled.
enum class Flavor : std::uint8_t { Operator = 0, Bra = 1, Ket = 2 };

struct Generator {
    GenKind kind;
    std::int32_t index;  // nonzero
    Flavor flavor = Flavor::Operator;

    bool creator() const { return index < 0; }
    auto operator<=>(const Generator&) const = default;
};

// Value of the commutator [left, right] (a central scalar).
// [a_n, b_m] = n delta_{n,-m}; a's commute with a's and b's with b's.
Rat commutator(const Generator& left, const Generator& right, bool state_contractions = true);

struct OperatorMonomial {
    std::vector<Generator> gens;
    int u_exponent = 0;
    Rat coefficient = 1;

    bool normally_ordered() const;
};

// Formal linear combination of monomials, merged on (generator word, u power).
class OperatorSum {
public:
    OperatorSum() = default;
    explicit OperatorSum(const OperatorMonomial& m) { add(m); }

    void add(const OperatorMonomial& m);
    OperatorSum& operator+=(const OperatorSum& other);
    OperatorSum operator*(const OperatorSum& other) const;

    std::vector<OperatorMonomial> monomials() const;
    std::size_t size() const { return terms_.size(); }
    Rat constant_term() const;  // coefficient of the empty word, summed over u powers

private:
    std::map<std::pair<std::vector<Generator>, int>, Rat> terms_;
};

// Rewrite a word as normally ordered monomials (creators left, annihilators
// right, each group sorted).
OperatorSum normal_order(const OperatorMonomial& m, bool state_contractions = true);
OperatorSum normal_order(const OperatorSum& s, bool state_contractions = true);

// M_c = u^{-1} sum over multisets Z of nonzero integers with sum c of
// (1/prod mult!) :prod a_z:, with a factor u per creator; truncated to
// positive mass <= E and negative mass <= E.
OperatorSum truncated_M_c(std::int64_t c, std::int64_t E);
// M = u^{-1} sum_{m=1}^{E} :b_{-m} b_m: with u on the creator (net u^0).
OperatorSum truncated_M(std::int64_t E);

// v_{mu,nu} = (1/|Aut mu||Aut nu|) prod a_{-mu_i} prod b_{-nu_j} v_0.
struct FockState {
    IntVec mu, nu;
};

OperatorMonomial ket_word(const FockState& s, Flavor f = Flavor::Ket);
OperatorMonomial bra_word(const FockState& s, Flavor f = Flavor::Bra);

Rat inner_product_formula(const FockState& left, const FockState& right);

// Laurent polynomial in u: exponent -> coefficient.
using Laurent = std::map<int, Rat>;

enum class Route { Feynman, NormalOrdering };

// <0| F_1 F_2 ... F_k |0> for a product of operator sums.
Laurent vacuum_expectation(const std::vector<OperatorSum>& factors, Route route, bool state_contractions = true);

// <v_out| ops |v_in>.
Laurent vacuum_expectation(const FockState& out, const std::vector<OperatorSum>& ops, const FockState& in,
                           Route route, bool state_contractions = true);

// Constant term of normal_order(product of the words): a third, fully
// literal evaluation used to cross-check both routes on monomial products.
Rat literal_vacuum_expectation(const std::vector<OperatorMonomial>& words);

// Covector of the normal-ordering route: terms are annihilator-only words
// (anything with a creator on the left is killed by the vacuum bra).
class Covector {
public:
    Covector() { terms_[{{}, 0}] = 1; }
    void apply(const OperatorSum& factor, bool state_contractions);
    void apply(const OperatorMonomial& word, bool state_contractions);
    Covector& operator+=(const Covector& other);
    Laurent finish() const;  // coefficients of the empty word
    std::size_t size() const { return terms_.size(); }

private:
    std::map<std::pair<std::vector<Generator>, int>, Rat> terms_;
};

}  // namespace tropogw
