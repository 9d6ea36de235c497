#pragma once

#include "vvmacd/intpoly.hpp"

namespace vvmacd {

// Element of Q(q,t) as a reduced fraction of IntPoly.
// Canonical form: gcd(num,den) trivial, joint integer content 1, den lead
// coefficient positive (under the (dq,dt)-lex term order), zero stored as 0/1.
// Two values are equal iff their representations are memberwise equal.
class RatQT {
public:
    RatQT() : num_(), den_(1) {}
    RatQT(long c) : num_(c), den_(1) {}
    RatQT(const mpz_class& c) : num_(c), den_(1) {}
    RatQT(const IntPoly& p) : num_(p), den_(1) {}
    RatQT(IntPoly num, IntPoly den);  // reduces

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatQT operator+(const RatQT& a, const RatQT& b);
    friend RatQT operator-(const RatQT& a, const RatQT& b);
    friend RatQT operator*(const RatQT& a, const RatQT& b);
    friend RatQT operator/(const RatQT& a, const RatQT& b);  // throws division_by_zero
    RatQT operator-() const;
    RatQT& operator+=(const RatQT& b) { *this = *this + b; return *this; }
    RatQT& operator-=(const RatQT& b) { *this = *this - b; return *this; }
    RatQT& operator*=(const RatQT& b) { *this = *this * b; return *this; }
    RatQT& operator/=(const RatQT& b) { *this = *this / b; return *this; }
    bool operator==(const RatQT& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const RatQT& b) const { return !(*this == b); }
    bool operator<(const RatQT& b) const;  // arbitrary total order (for map keys)

    RatQT inv() const;
    RatQT pow(int e) const;  // negative e inverts

    // t-adic valuation val_t(num) - val_t(den); 0 by convention for zero.
    int t_valuation() const;

    // Exact value at (q0,t0); throws pole_error if the denominator vanishes.
    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    bool is_q_only() const { return num_.deg_t() <= 0 && den_.deg_t() <= 0; }

    std::string str() const;

private:
    void reduce();
    IntPoly num_, den_;
};

// q^a t^b with negative exponents represented through the denominator.
RatQT laurent_monomial(int a, int b);

// [n]_t! = prod_{i=1..n} (1-t^i)/(1-t)
RatQT t_factorial(int n);
// product of [m_i]_t! over the parts of a composition
RatQT mu_factorial(const std::vector<int>& mu);

// Gaussian-weighted elementary symmetric value e_r(1, t, ..., t^{n-1}).
RatQT e_r_principal(int r, int n);

}  // namespace vvmacd
