#include "genergy/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace genergy {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::constant(long c) { return from_ints({c}); }
IntPoly IntPoly::x() { return from_ints({0, 1}); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

IntPoly IntPoly::shifted(int k) const {
    if (zero()) return {};
    std::vector<mpz_class> r(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_x2() const {
    if (zero()) return {};
    std::vector<mpz_class> r(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return IntPoly(std::move(r));
}

mpq_class IntPoly::eval_q(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

double IntPoly::eval_d(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string IntPoly::coeff_csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] -= b.c_[i];
    }
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<mpz_class> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

IntPoly operator*(const mpz_class& k, const IntPoly& a) {
    std::vector<mpz_class> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k * a.c_[i];
    return IntPoly(std::move(r));
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& z : p.coeffs()) c_.emplace_back(z);
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }
RatPoly RatPoly::x() { return RatPoly(std::vector<mpq_class>{0, 1}); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

RatPoly RatPoly::shifted(int k) const {
    if (zero()) return {};
    std::vector<mpq_class> r(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return RatPoly(std::move(r));
}

mpq_class RatPoly::eval_q(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RatPoly::eval_d(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string RatPoly::coeff_csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    return os.str();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] -= b.c_[i];
    }
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<mpq_class> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

RatPoly operator*(const mpq_class& k, const RatPoly& a) {
    std::vector<mpq_class> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k * a.c_[i];
    return RatPoly(std::move(r));
}

// ------------------------------------------------------- axis magnitude

double log_abs_mpz(const mpz_class& m) {
    if (m == 0) return kNegInf;
    long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, m.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp2) * M_LN2;
}

std::vector<mpz_class> bipartite_b_coeffs(const IntPoly& p) {
    if (p.zero()) throw std::invalid_argument("bipartite_b_coeffs: zero polynomial");
    const int n = p.degree();
    // a_j = coefficient of x^(n-j); bipartite form demands a_j = 0 for odd j.
    for (int j = 1; j <= n; j += 2) {
        if (p.coeff(n - j) != 0)
            throw std::invalid_argument("bipartite_b_coeffs: not bipartite-form (odd coefficient a_" +
                                        std::to_string(j) + " nonzero)");
    }
    std::vector<mpz_class> b;
    b.reserve(n / 2 + 1);
    for (int k = 0; 2 * k <= n; ++k) {
        mpz_class v = p.coeff(n - 2 * k);
        if (k % 2 == 1) v = -v;
        if (v < 0)
            throw std::invalid_argument("bipartite_b_coeffs: invariant violation, b_" +
                                        std::to_string(2 * k) + " negative");
        b.push_back(v);
    }
    return b;
}

namespace {

// log |sum_i s_i exp(t_i)| via a running maximum. Entries with t = -inf
// are ignored. Returns -inf if everything cancels or is absent.
double signed_log_sum_exp(const std::vector<std::pair<double, int>>& terms) {
    double tmax = kNegInf;
    for (const auto& [t, s] : terms)
        if (s != 0 && t > tmax) tmax = t;
    if (tmax == kNegInf) return kNegInf;
    double acc = 0.0;
    for (const auto& [t, s] : terms)
        if (s != 0) acc += s * std::exp(t - tmax);
    if (acc == 0.0) return kNegInf;
    return tmax + std::log(std::fabs(acc));
}

}  // namespace

double eval_log_magnitude_imag_axis(const IntPoly& p, double x) {
    if (p.zero()) throw std::invalid_argument("eval_log_magnitude_imag_axis: zero polynomial");
    const int n = p.degree();
    const double ax = std::fabs(x);  // |phi(G, ix)| is even in x
    if (ax == 0.0) return log_abs_mpz(p.coeff(0));
    const double lx = std::log(ax);

    // phi(G, ix) = i^n (R - i S) with
    //   R = sum_k (-1)^k a_{2k}   x^(n-2k)
    //   S = sum_k (-1)^k a_{2k+1} x^(n-2k-1)
    // For bipartite-form p all a_{2k+1} vanish and R = sum_k b_{2k} x^(n-2k)
    // has nonnegative terms only.
    std::vector<std::pair<double, int>> even_terms, odd_terms;
    for (int j = 0; j <= n; ++j) {
        const mpz_class a = p.coeff(n - j);
        if (a == 0) continue;
        int sgn = mpz_sgn(a.get_mpz_t());
        if ((j / 2) % 2 == 1) sgn = -sgn;  // the (-1)^k factor, k = j/2
        const double t = log_abs_mpz(a) + static_cast<double>(n - j) * lx;
        (j % 2 == 0 ? even_terms : odd_terms).push_back({t, sgn});
    }
    const double lr = signed_log_sum_exp(even_terms);
    if (odd_terms.empty()) return lr;
    const double ls = signed_log_sum_exp(odd_terms);
    // 0.5 * log(R^2 + S^2), staying in the log domain.
    if (lr == kNegInf) return ls;
    if (ls == kNegInf) return lr;
    const double hi = std::max(lr, ls), lo = std::min(lr, ls);
    return hi + 0.5 * std::log1p(std::exp(2.0 * (lo - hi)));
}

}
