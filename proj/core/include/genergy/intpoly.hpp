#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace genergy {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored low-to-high. The zero polynomial has an empty
/// coefficient vector; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly from_ints(std::initializer_list<long> coeffs);
    static IntPoly constant(long c);
    static IntPoly x();

    bool zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly shifted(int k) const;   // * x^k
    IntPoly compose_x2() const;     // p(x^2)

    mpq_class eval_q(const mpq_class& x) const;
    double eval_d(double x) const;

    std::string coeff_csv() const;  // low-to-high, decimal, comma-separated

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const mpz_class& k, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Same layout with exact rational coefficients (always canonical).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    RatPoly(const IntPoly& p);  // NOLINT: intentional widening conversion
    static RatPoly constant(const mpq_class& c);
    static RatPoly x();

    bool zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    RatPoly shifted(int k) const;
    mpq_class eval_q(const mpq_class& x) const;
    double eval_d(double x) const;
    std::string coeff_csv() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const mpq_class& k, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// log|m| as a double, exact to rounding for any magnitude; -inf for m = 0.
double log_abs_mpz(const mpz_class& m);

/// Sign-normalized even coefficients b_{2k} = (-1)^k a_{2k} of the
/// characteristic polynomial of a bipartite graph. Throws
/// std::invalid_argument if an odd-index coefficient is nonzero
/// ("not bipartite-form") or a b_{2k} comes out negative.
std::vector<mpz_class> bipartite_b_coeffs(const IntPoly& p);

/// log|phi(G, ix)| for real x, where p = phi(G, .). For bipartite-form
/// polynomials this is log sum b_{2k} x^(n-2k), accumulated with a
/// log-sum-exp scheme so degrees in the hundreds do not overflow.
/// Returns -infinity (the integrable-singularity marker) when the value
/// is exactly zero, which happens only at x = 0 with vanishing constant
/// term.
double eval_log_magnitude_imag_axis(const IntPoly& p, double x);

}
