#include "genergy/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace genergy {

namespace {

// s^2 = x^2 + 4
const RatPoly& disc() {
    static const RatPoly d(std::vector<mpq_class>{4, 0, 1});
    return d;
}

}  // namespace

SurdElem SurdElem::z1() {
    return SurdElem(RatPoly(std::vector<mpq_class>{0, mpq_class(1, 2)}),
                    RatPoly::constant(mpq_class(1, 2)));
}

SurdElem SurdElem::z2() {
    return SurdElem(RatPoly(std::vector<mpq_class>{0, mpq_class(1, 2)}),
                    RatPoly::constant(mpq_class(-1, 2)));
}

double SurdElem::eval_d(double x) const {
    return u_.eval_d(x) + v_.eval_d(x) * std::sqrt(x * x + 4.0);
}

SurdElem operator+(const SurdElem& a, const SurdElem& b) {
    return SurdElem(a.u_ + b.u_, a.v_ + b.v_);
}

SurdElem operator-(const SurdElem& a, const SurdElem& b) {
    return SurdElem(a.u_ - b.u_, a.v_ - b.v_);
}

SurdElem operator-(const SurdElem& a) { return SurdElem(-a.u_, -a.v_); }

SurdElem operator*(const SurdElem& a, const SurdElem& b) {
    // (u1 + v1 s)(u2 + v2 s) = u1 u2 + v1 v2 (x^2+4) + (u1 v2 + u2 v1) s
    return SurdElem(a.u_ * b.u_ + (a.v_ * b.v_) * disc(), a.u_ * b.v_ + b.u_ * a.v_);
}

SurdElem pow(const SurdElem& base, unsigned n) {
    SurdElem result = SurdElem::constant(1);
    SurdElem acc = base;
    while (n > 0) {
        if (n & 1u) result = result * acc;
        n >>= 1u;
        if (n) acc = acc * acc;
    }
    return result;
}

ClearedSurd clear_denominators(const SurdElem& e) {
    mpz_class lcm = 1;
    for (const auto& q : e.u().coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& q : e.v().coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    auto scale = [&lcm](const RatPoly& p) {
        std::vector<mpz_class> c(p.coeffs().size());
        for (size_t i = 0; i < c.size(); ++i) {
            mpq_class q = p.coeffs()[i] * mpq_class(lcm);
            if (q.get_den() != 1) throw std::logic_error("clear_denominators: lcm failed");
            c[i] = q.get_num();
        }
        return IntPoly(std::move(c));
    };
    return {scale(e.u()), scale(e.v()), lcm};
}

SurdFraction::SurdFraction(SurdElem num, SurdElem den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::invalid_argument("SurdFraction: zero denominator");
}

SurdFraction operator+(const SurdFraction& a, const SurdFraction& b) {
    if (a.den_ == b.den_) return SurdFraction(a.num_ + b.num_, a.den_);
    return SurdFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

SurdFraction operator-(const SurdFraction& a, const SurdFraction& b) {
    if (a.den_ == b.den_) return SurdFraction(a.num_ - b.num_, a.den_);
    return SurdFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

SurdFraction operator-(const SurdFraction& a) { return SurdFraction(-a.num_, a.den_); }

SurdFraction operator*(const SurdFraction& a, const SurdFraction& b) {
    return SurdFraction(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const SurdFraction& a, const SurdFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

}
