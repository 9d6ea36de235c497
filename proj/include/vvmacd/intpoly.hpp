#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vvmacd {

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : arith_error {
    division_by_zero() : arith_error("division by zero") {}
};
struct pole_error : arith_error {
    pole_error() : arith_error("evaluation at a pole") {}
};

// Sparse polynomial in Z[q,t] with nonnegative exponents.
// Terms are kept in a sorted map keyed by (dq,dt); no zero coefficients are stored,
// so equality is plain memberwise comparison and the "leading" term (largest key)
// is well defined for sign normalization.
class IntPoly {
public:
    using Key = std::pair<int, int>;  // (dq, dt)
    using Terms = std::map<Key, mpz_class>;

    IntPoly() = default;
    IntPoly(long c) { set(0, 0, mpz_class(c)); }
    IntPoly(const mpz_class& c) { set(0, 0, c); }
    static IntPoly monomial(int dq, int dt, const mpz_class& c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const Terms& terms() const { return terms_; }

    // Adds c to the (dq,dt) coefficient, erasing it if the sum vanishes.
    void add_term(int dq, int dt, const mpz_class& c);
    void set(int dq, int dt, const mpz_class& c);
    mpz_class coeff(int dq, int dt) const;

    int deg_q() const;  // -1 for the zero polynomial
    int deg_t() const;
    int val_t() const;  // minimal dt among terms; 0 for the zero polynomial
    int val_q() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& b);
    IntPoly& operator-=(const IntPoly& b);
    IntPoly& operator*=(const IntPoly& b) { *this = *this * b; return *this; }
    bool operator==(const IntPoly& b) const { return terms_ == b.terms_; }
    bool operator!=(const IntPoly& b) const { return !(*this == b); }
    bool operator<(const IntPoly& b) const { return terms_ < b.terms_; }

    // Leading coefficient under the canonical (dq,dt)-lex term order.
    const mpz_class& lead_coeff() const;
    // gcd of all integer coefficients (nonnegative; 0 for the zero polynomial).
    mpz_class content() const;
    void divide_by_int(const mpz_class& d);  // exact, d != 0

    // Shifts all t-exponents down by k (every term must have dt >= k).
    IntPoly shift_t_down(int k) const;

    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    std::string str() const;  // human-readable, canonical order

private:
    Terms terms_;
};

// gcd in Z[q,t], computed in Z[q][t] via content/primitive-part split and a
// subresultant PRS; result has positive leading coefficient. gcd(0,0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Exact division: asserts b | a, returns a/b.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

}  // namespace vvmacd
