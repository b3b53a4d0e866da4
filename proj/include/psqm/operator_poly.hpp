#pragma once

#include "psqm/term_map.hpp"

namespace psqm {

// Noncommutative polynomial in the canonical pair (q, p) with [q, p] = i,
// held in standard order: every term is a word q^a p^b. The term map is a
// unique normal form, so equality is map equality.
class OperatorPoly {
public:
    OperatorPoly() = default;

    static OperatorPoly zero() { return {}; }
    static OperatorPoly one() { return monomial({0, 0}, CRational(1)); }
    static OperatorPoly q(int power = 1) { return monomial({power, 0}, CRational(1)); }
    static OperatorPoly p(int power = 1) { return monomial({0, power}, CRational(1)); }

    static OperatorPoly monomial(Exponents e, CRational c) {
        OperatorPoly out;
        accumulate_term(out.terms_, e, c);
        return out;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial
    int degree() const { return total_degree(terms_); }

    CRational coefficient(Exponents e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? CRational(0) : it->second;
    }

    void add_term(Exponents e, const CRational& c) { accumulate_term(terms_, e, c); }

    OperatorPoly& operator+=(const OperatorPoly& o) {
        for (const auto& [e, c] : o.terms_) accumulate_term(terms_, e, c);
        return *this;
    }
    OperatorPoly& operator-=(const OperatorPoly& o) {
        for (const auto& [e, c] : o.terms_) accumulate_term(terms_, e, -c);
        return *this;
    }

    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }

    OperatorPoly operator-() const {
        OperatorPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend OperatorPoly operator*(const CRational& s, const OperatorPoly& a) {
        OperatorPoly out;
        for (const auto& [e, c] : a.terms_) accumulate_term(out.terms_, e, s * c);
        return out;
    }

    // Product in standard order, reordering with p^b q^c =
    // sum_k (-i)^k k! C(b,k) C(c,k) q^(c-k) p^(b-k); exact coefficients.
    friend OperatorPoly operator*(const OperatorPoly& A, const OperatorPoly& B);

    // Conjugates coefficients and reverses each word, then re-canonicalizes.
    OperatorPoly adjoint() const;

    friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

private:
    TermMap terms_;
};

}  // namespace psqm
