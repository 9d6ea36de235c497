#include "vvmacd/ratqt.hpp"

#include <cassert>

namespace vvmacd {

RatQT::RatQT(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    reduce();
}

void RatQT::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (!den_.is_one()) {
        IntPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    mpz_class cn = num_.content(), cd = den_.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
        num_.divide_by_int(c);
        den_.divide_by_int(c);
    }
    if (den_.lead_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatQT operator+(const RatQT& a, const RatQT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
    return RatQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatQT operator-(const RatQT& a, const RatQT& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatQT(a.num_ - b.num_, a.den_);
    return RatQT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatQT operator*(const RatQT& a, const RatQT& b) {
    if (a.is_zero() || b.is_zero()) return RatQT();
    return RatQT(a.num_ * b.num_, a.den_ * b.den_);
}

RatQT operator/(const RatQT& a, const RatQT& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return RatQT();
    return RatQT(a.num_ * b.den_, a.den_ * b.num_);
}

RatQT RatQT::operator-() const {
    RatQT r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RatQT::operator<(const RatQT& b) const {
    if (num_ != b.num_) return num_ < b.num_;
    return den_ < b.den_;
}

RatQT RatQT::inv() const {
    if (is_zero()) throw division_by_zero();
    return RatQT(den_, num_);
}

RatQT RatQT::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatQT r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int RatQT::t_valuation() const {
    if (is_zero()) return 0;
    return num_.val_t() - den_.val_t();
}

mpq_class RatQT::eval(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class d = den_.eval(q0, t0);
    if (d == 0) throw pole_error();
    return num_.eval(q0, t0) / d;
}

std::string RatQT::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatQT laurent_monomial(int a, int b) {
    IntPoly num = IntPoly::monomial(std::max(a, 0), std::max(b, 0));
    IntPoly den = IntPoly::monomial(std::max(-a, 0), std::max(-b, 0));
    return RatQT(num, den);
}

RatQT t_factorial(int n) {
    assert(n >= 0);
    IntPoly one(1), t = IntPoly::monomial(0, 1);
    RatQT r(1);
    IntPoly denom = one - t;
    for (int i = 1; i <= n; ++i)
        r *= RatQT(one - IntPoly::monomial(0, i), denom);
    return r;
}

RatQT mu_factorial(const std::vector<int>& mu) {
    RatQT r(1);
    for (int m : mu) r *= t_factorial(m);
    return r;
}

RatQT e_r_principal(int r, int n) {
    assert(0 <= r && r <= n);
    // e_r(1,t,...,t^{n-1}) = t^{r(r-1)/2} * prod_{i=1..r} (1-t^{n-i+1})/(1-t^i)
    RatQT v = laurent_monomial(0, r * (r - 1) / 2);
    IntPoly one(1);
    for (int i = 1; i <= r; ++i)
        v *= RatQT(one - IntPoly::monomial(0, n - i + 1), one - IntPoly::monomial(0, i));
    return v;
}

}  // namespace vvmacd
