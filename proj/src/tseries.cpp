#include "vvmacd/tseries.hpp"

#include <cassert>
#include <sstream>

namespace vvmacd {

TSeries::TSeries(long val, std::vector<RatQT> coeffs) : val_(val), coeffs_(std::move(coeffs)) {
    assert(!coeffs_.empty());
    normalize();
}

void TSeries::normalize() {
    while (coeffs_.size() > 1 && coeffs_.front().is_zero()) {
        coeffs_.erase(coeffs_.begin());
        ++val_;
    }
}

bool TSeries::is_zero() const {
    for (auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

RatQT TSeries::at(long e) const {
    assert(e <= hi());
    if (e < val_) return RatQT();
    return coeffs_[static_cast<size_t>(e - val_)];
}

TSeries operator+(const TSeries& a, const TSeries& b) {
    long hi = std::min(a.hi(), b.hi());
    long v = std::min(a.val_, b.val_);
    assert(v <= hi);
    std::vector<RatQT> c;
    c.reserve(static_cast<size_t>(hi - v + 1));
    for (long e = v; e <= hi; ++e) c.push_back(a.at(e) + b.at(e));
    return TSeries(v, std::move(c));
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries TSeries::operator-() const {
    TSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<RatQT> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<size_t>(i + j)] += a.coeffs_[i] * b.coeffs_[j];
    return TSeries(a.val_ + b.val_, std::move(c));
}

bool TSeries::agrees_with(const TSeries& b) const {
    long hi = std::min(this->hi(), b.hi());
    for (long e = std::min(val_, b.val_); e <= hi; ++e)
        if (at(e) != b.at(e)) return false;
    return true;
}

std::string TSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (long e = val_; e <= hi(); ++e) {
        RatQT c = at(e);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*t^" << e;
    }
    if (first) os << "0";
    os << " + O(t^" << hi() + 1 << ")";
    return os.str();
}

TSeries to_series(const RatQT& f, int order) {
    assert(order >= 0);
    if (f.is_zero()) return TSeries(0, std::vector<RatQT>(static_cast<size_t>(order) + 1));
    int vn = f.num().val_t(), vd = f.den().val_t();
    IntPoly N = f.num().shift_t_down(vn), D = f.den().shift_t_down(vd);
    // collect t-coefficients as q-only rational functions
    int dn = N.deg_t(), dd = D.deg_t();
    std::vector<RatQT> nc(static_cast<size_t>(dn) + 1), dc(static_cast<size_t>(dd) + 1);
    for (auto& [k, c] : N.terms()) {
        IntPoly m = IntPoly::monomial(k.first, 0, c);
        nc[static_cast<size_t>(k.second)] += RatQT(m);
    }
    for (auto& [k, c] : D.terms()) {
        IntPoly m = IntPoly::monomial(k.first, 0, c);
        dc[static_cast<size_t>(k.second)] += RatQT(m);
    }
    assert(!dc[0].is_zero());
    std::vector<RatQT> out(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        RatQT acc = k <= dn ? nc[static_cast<size_t>(k)] : RatQT();
        for (int j = 1; j <= std::min(k, dd); ++j)
            acc -= dc[static_cast<size_t>(j)] * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / dc[0];
    }
    return TSeries(vn - vd, std::move(out));
}

}  // namespace vvmacd
