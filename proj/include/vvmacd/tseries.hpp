#pragma once

#include "vvmacd/ratqt.hpp"

namespace vvmacd {

// Truncated Laurent series in t with coefficients in Q(q): knows the exact
// coefficient of t^e for every e <= hi(), where hi() = val + order.
// Coefficients below val() are exactly zero.
class TSeries {
public:
    TSeries() : val_(0), coeffs_{RatQT()} {}
    TSeries(long val, std::vector<RatQT> coeffs);

    long val() const { return val_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    long hi() const { return val_ + order(); }
    const std::vector<RatQT>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    // Coefficient of t^e; e must be <= hi().
    RatQT at(long e) const;

    friend TSeries operator+(const TSeries& a, const TSeries& b);
    friend TSeries operator-(const TSeries& a, const TSeries& b);
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    TSeries operator-() const;
    TSeries& operator+=(const TSeries& b) { *this = *this + b; return *this; }

    // True iff coefficients agree for every exponent e <= min(hi(), b.hi()).
    bool agrees_with(const TSeries& b) const;

    std::string str() const;

private:
    void normalize();
    long val_;
    std::vector<RatQT> coeffs_;
};

// t-adic expansion of f to `order` terms past the valuation: writes
// f = t^v * N/D with D(q,0) != 0 and divides as power series.
TSeries to_series(const RatQT& f, int order);

}  // namespace vvmacd
