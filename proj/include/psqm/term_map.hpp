#pragma once

#include <map>

#include "psqm/rational.hpp"

namespace psqm {

// Exponent pair of a bivariate monomial. For a PolySymbol this is q^a p^b in
// commuting variables; for an OperatorPoly it is the standard-ordered word
// with all q-factors to the left of all p-factors.
struct Exponents {
    int a = 0;  // q exponent
    int b = 0;  // p exponent

    int degree() const { return a + b; }
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

using TermMap = std::map<Exponents, CRational>;

// Canonical sparse form: zero coefficients are never stored.
inline void accumulate_term(TermMap& terms, Exponents e, const CRational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

inline int total_degree(const TermMap& terms) {
    int deg = -1;
    for (const auto& [e, c] : terms)
        if (e.degree() > deg) deg = e.degree();
    return deg;
}

}  // namespace psqm
