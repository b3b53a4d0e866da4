#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace psqm {

// Exact rational scalar. All symbolic computation in the library runs on
// these; doubles only appear on the grid side.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d" with optional leading sign on n.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (sgn(mpq_class(r.get_den())) == 0)
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Gaussian rational a + b*i. Exact complex arithmetic; the commutator
// [q,p] = i lives in this field.
struct CRational {
    Rational re{0};
    Rational im{0};

    CRational() = default;
    CRational(long v) : re(v) {}  // NOLINT: implicit by design
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static CRational unit_i() { return {Rational(0), Rational(1)}; }

    // i^k with exact cycling
    static CRational i_pow(unsigned k) {
        switch (k % 4) {
            case 0: return {Rational(1), Rational(0)};
            case 1: return {Rational(0), Rational(1)};
            case 2: return {Rational(-1), Rational(0)};
            default: return {Rational(0), Rational(-1)};
        }
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    CRational conj() const { return {re, -im}; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    CRational operator-() const { return {-re, -im}; }

    CRational& operator+=(const CRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRational& operator-=(const CRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRational& operator*=(const CRational& o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    friend CRational operator+(CRational a, const CRational& b) { return a += b; }
    friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
    friend CRational operator*(CRational a, const CRational& b) { return a *= b; }

    friend CRational operator/(const CRational& a, const CRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        Rational n2 = b.re * b.re + b.im * b.im;
        CRational num = a * b.conj();
        return {num.re / n2, num.im / n2};
    }

    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

}  // namespace psqm
