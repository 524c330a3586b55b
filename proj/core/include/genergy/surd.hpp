#pragma once

#include "genergy/intpoly.hpp"

namespace genergy {

/// Element u(x) + v(x)*s of Q[x][s]/(s^2 - x^2 - 4), the ring where the
/// closed forms Z1 = (x+s)/2, Z2 = (x-s)/2 and everything built from them
/// live. Arithmetic rewrites s^2 to x^2+4 and is exact.
class SurdElem {
public:
    SurdElem() = default;
    SurdElem(RatPoly u, RatPoly v) : u_(std::move(u)), v_(std::move(v)) {}
    static SurdElem from_poly(RatPoly u) { return SurdElem(std::move(u), {}); }
    static SurdElem from_int_poly(const IntPoly& p) { return from_poly(RatPoly(p)); }
    static SurdElem constant(const mpq_class& c) { return from_poly(RatPoly::constant(c)); }
    static SurdElem x() { return from_poly(RatPoly::x()); }
    static SurdElem sqrt_disc() { return SurdElem({}, RatPoly::constant(1)); }  // s
    static SurdElem z1();  // (x + s)/2
    static SurdElem z2();  // (x - s)/2

    const RatPoly& u() const { return u_; }
    const RatPoly& v() const { return v_; }
    bool zero() const { return u_.zero() && v_.zero(); }
    bool is_polynomial() const { return v_.zero(); }

    SurdElem conj() const { return SurdElem(u_, -v_); }

    /// u(x) + v(x) sqrt(x^2+4) in double arithmetic.
    double eval_d(double x) const;

    friend SurdElem operator+(const SurdElem& a, const SurdElem& b);
    friend SurdElem operator-(const SurdElem& a, const SurdElem& b);
    friend SurdElem operator-(const SurdElem& a);
    friend SurdElem operator*(const SurdElem& a, const SurdElem& b);
    friend bool operator==(const SurdElem& a, const SurdElem& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
    friend bool operator!=(const SurdElem& a, const SurdElem& b) { return !(a == b); }

private:
    RatPoly u_, v_;
};

SurdElem pow(const SurdElem& base, unsigned n);

/// Auditable clearance of the rational coefficient denominators:
/// e = (u + v*s) / den with integer polynomials and a positive integer den.
struct ClearedSurd {
    IntPoly u, v;
    mpz_class den;
};
ClearedSurd clear_denominators(const SurdElem& e);

/// Exact rational function over the surd ring, kept unreduced; equality is
/// decided by cross-multiplication. Denominators must be nonzero.
class SurdFraction {
public:
    SurdFraction() : num_(), den_(SurdElem::constant(1)) {}
    SurdFraction(SurdElem num, SurdElem den);
    SurdFraction(const SurdElem& e) : num_(e), den_(SurdElem::constant(1)) {}  // NOLINT

    const SurdElem& num() const { return num_; }
    const SurdElem& den() const { return den_; }

    double eval_d(double x) const { return num_.eval_d(x) / den_.eval_d(x); }

    friend SurdFraction operator+(const SurdFraction& a, const SurdFraction& b);
    friend SurdFraction operator-(const SurdFraction& a, const SurdFraction& b);
    friend SurdFraction operator-(const SurdFraction& a);
    friend SurdFraction operator*(const SurdFraction& a, const SurdFraction& b);
    /// Exact equality of the represented rational functions.
    friend bool operator==(const SurdFraction& a, const SurdFraction& b);
    friend bool operator!=(const SurdFraction& a, const SurdFraction& b) { return !(a == b); }

private:
    SurdElem num_, den_;
};

}
