#include "vvmacd/intpoly.hpp"

#include <cassert>
#include <sstream>

namespace vvmacd {

IntPoly IntPoly::monomial(int dq, int dt, const mpz_class& c) {
    IntPoly p;
    p.set(dq, dt, c);
    return p;
}

bool IntPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

void IntPoly::add_term(int dq, int dt, const mpz_class& c) {
    if (c == 0) return;
    Key k{dq, dt};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void IntPoly::set(int dq, int dt, const mpz_class& c) {
    Key k{dq, dt};
    if (c == 0)
        terms_.erase(k);
    else
        terms_[k] = c;
}

mpz_class IntPoly::coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int IntPoly::deg_q() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int IntPoly::deg_t() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int IntPoly::val_t() const {
    if (terms_.empty()) return 0;
    int v = terms_.begin()->first.second;
    for (auto& [k, c] : terms_) v = std::min(v, k.second);
    return v;
}

int IntPoly::val_q() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.first;  // map is (dq,dt)-lex sorted
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    r += b;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    r -= b;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& b) {
    for (auto& [k, c] : b.terms_) add_term(k.first, k.second, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& b) {
    for (auto& [k, c] : b.terms_) add_term(k.first, k.second, -c);
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    mpz_class tmp;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) {
            tmp = ca * cb;
            r.add_term(ka.first + kb.first, ka.second + kb.second, tmp);
        }
    return r;
}

const mpz_class& IntPoly::lead_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (auto& [k, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void IntPoly::divide_by_int(const mpz_class& d) {
    assert(d != 0);
    for (auto& [k, c] : terms_) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        assert(r == 0);
        c = q;
    }
}

IntPoly IntPoly::shift_t_down(int k) const {
    IntPoly r;
    for (auto& [key, c] : terms_) {
        assert(key.second >= k);
        r.terms_.emplace(Key{key.first, key.second - k}, c);
    }
    return r;
}

mpq_class IntPoly::eval(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class acc = 0;
    for (auto& [k, c] : terms_) {
        mpq_class m = c;
        for (int i = 0; i < k.first; ++i) m *= q0;
        for (int i = 0; i < k.second; ++i) m *= t0;
        acc += m;
    }
    return acc;
}

std::string IntPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = k.first > 0 || k.second > 0;
        if (a != 1 || !has_var) os << a.get_str();
        if (a != 1 && has_var) os << "*";
        if (k.first > 0) {
            os << "q";
            if (k.first > 1) os << "^" << k.first;
            if (k.second > 0) os << "*";
        }
        if (k.second > 0) {
            os << "t";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery: dense Z[q] and Z[q][t] views.

namespace {

using ZQ = std::vector<mpz_class>;   // coefficient i of q^i, trimmed
using ZQT = std::vector<ZQ>;         // coefficient i of t^i, trimmed

void trim(ZQ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool zq_zero(const ZQ& a) { return a.empty(); }
int zq_deg(const ZQ& a) { return static_cast<int>(a.size()) - 1; }

ZQ zq_mul(const ZQ& a, const ZQ& b) {
    if (a.empty() || b.empty()) return {};
    ZQ r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ZQ zq_sub(const ZQ& a, const ZQ& b) {
    ZQ r = a;
    if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZQ zq_neg(const ZQ& a) {
    ZQ r = a;
    for (auto& c : r) c = -c;
    return r;
}

ZQ zq_pow(const ZQ& a, int e) {
    ZQ r{mpz_class(1)};
    for (int i = 0; i < e; ++i) r = zq_mul(r, a);
    return r;
}

mpz_class zq_content(const ZQ& a) {
    mpz_class g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zq_div_int(ZQ& a, const mpz_class& d) {
    for (auto& c : a) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        assert(r == 0);
        c = q;
    }
}

// Exact division in Z[q]; asserts divisibility.
ZQ zq_divexact(const ZQ& a, const ZQ& b) {
    assert(!zq_zero(b));
    if (zq_zero(a)) return {};
    assert(zq_deg(a) >= zq_deg(b));
    ZQ rem = a;
    ZQ quo(a.size() - b.size() + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    for (int d = zq_deg(rem) - zq_deg(b); !zq_zero(rem) && zq_deg(rem) >= zq_deg(b);
         d = zq_deg(rem) - zq_deg(b)) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
        assert(r == 0);
        quo[d] = q;
        ZQ sub(d, mpz_class(0));
        sub.insert(sub.end(), b.begin(), b.end());
        for (auto& c : sub) c *= q;
        rem = zq_sub(rem, sub);
    }
    assert(zq_zero(rem));
    trim(quo);
    return quo;
}

// Subresultant PRS gcd in Z[q]; result has positive leading coefficient.
ZQ zq_gcd(ZQ a, ZQ b) {
    trim(a);
    trim(b);
    auto normalize = [](ZQ p) {
        if (!p.empty() && p.back() < 0)
            for (auto& c : p) c = -c;
        return p;
    };
    if (zq_zero(a)) return normalize(b);
    if (zq_zero(b)) return normalize(a);
    mpz_class ca = zq_content(a), cb = zq_content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    zq_div_int(a, ca);
    zq_div_int(b, cb);
    if (zq_deg(a) < zq_deg(b)) std::swap(a, b);
    mpz_class g = 1, h = 1;
    while (true) {
        int delta = zq_deg(a) - zq_deg(b);
        // pseudo-remainder lc(b)^{delta+1} * a mod b
        ZQ r = a;
        int e = delta + 1;
        const mpz_class lb = b.back();
        while (!zq_zero(r) && zq_deg(r) >= zq_deg(b)) {
            int d = zq_deg(r) - zq_deg(b);
            mpz_class lr = r.back();
            ZQ rb = r;
            for (auto& x : rb) x *= lb;
            ZQ sb(d, mpz_class(0));
            sb.insert(sb.end(), b.begin(), b.end());
            for (auto& x : sb) x *= lr;
            r = zq_sub(rb, sb);
            --e;
        }
        if (e > 0) {
            mpz_class f;
            mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), e);
            for (auto& x : r) x *= f;
        }
        if (zq_zero(r)) {
            mpz_class cnt = zq_content(b);
            zq_div_int(b, cnt);
            b = normalize(b);
            for (auto& x : b) x *= c;
            return b;
        }
        if (zq_deg(b) == 0) return {c};
        a = b;
        mpz_class divisor;
        {
            mpz_class hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta);
            divisor = g * hp;
        }
        zq_div_int(r, divisor);
        b = r;
        if (zq_deg(b) < 0) return {c};
        g = a.back();
        if (delta > 0) {
            mpz_class gp, hp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), delta);
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta - 1);
            mpz_class q, rr;
            mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            assert(rr == 0);
            h = q;
        }
        if (zq_deg(b) == 0) return {c};
    }
}

void trim(ZQT& a) {
    while (!a.empty() && zq_zero(a.back())) a.pop_back();
}

int zqt_deg(const ZQT& a) { return static_cast<int>(a.size()) - 1; }
bool zqt_zero(const ZQT& a) { return a.empty(); }

ZQT to_zqt(const IntPoly& p) {
    ZQT r;
    for (auto& [k, c] : p.terms()) {
        if (static_cast<int>(r.size()) <= k.second) r.resize(k.second + 1);
        ZQ& cf = r[k.second];
        if (static_cast<int>(cf.size()) <= k.first) cf.resize(k.first + 1, mpz_class(0));
        cf[k.first] = c;
    }
    for (auto& cf : r) trim(cf);
    trim(r);
    return r;
}

IntPoly from_zqt(const ZQT& a) {
    IntPoly p;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0) p.set(static_cast<int>(j), static_cast<int>(i), a[i][j]);
    return p;
}

ZQT zqt_scale(const ZQT& a, const ZQ& s) {
    ZQT r;
    r.reserve(a.size());
    for (auto& cf : a) r.push_back(zq_mul(cf, s));
    trim(r);
    return r;
}

ZQT zqt_sub(const ZQT& a, const ZQT& b) {
    ZQT r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = zq_sub(r[i], b[i]);
    trim(r);
    return r;
}

// content of a in Z[q] (gcd of its t-coefficients), positive leading coefficient
ZQ zqt_content(const ZQT& a) {
    ZQ g;
    for (auto& cf : a) g = zq_gcd(g, cf);
    return g;
}

void zqt_div_zq(ZQT& a, const ZQ& d) {
    for (auto& cf : a)
        if (!zq_zero(cf)) cf = zq_divexact(cf, d);
}

// Subresultant PRS for t-primitive inputs; returns a t-primitive gcd.
ZQT zqt_prs_gcd(ZQT a, ZQT b) {
    if (zqt_deg(a) < zqt_deg(b)) std::swap(a, b);
    if (zqt_deg(b) == 0) return {{mpz_class(1)}};  // primitive degree-0 is a unit
    ZQ g{mpz_class(1)}, h{mpz_class(1)};
    while (true) {
        int delta = zqt_deg(a) - zqt_deg(b);
        ZQT r = a;
        int e = delta + 1;
        const ZQ lb = b.back();
        while (!zqt_zero(r) && zqt_deg(r) >= zqt_deg(b)) {
            int d = zqt_deg(r) - zqt_deg(b);
            ZQ lr = r.back();
            ZQT rb = zqt_scale(r, lb);
            ZQT sb(d);
            for (auto& cf : b) sb.push_back(cf);
            sb = zqt_scale(sb, lr);
            r = zqt_sub(rb, sb);
            --e;
        }
        if (e > 0) {
            ZQ f = zq_pow(lb, e);
            r = zqt_scale(r, f);
        }
        if (zqt_zero(r)) {
            ZQ cnt = zqt_content(b);
            zqt_div_zq(b, cnt);
            return b;
        }
        if (zqt_deg(b) == 0) return {{mpz_class(1)}};
        a = b;
        ZQ divisor = zq_mul(g, zq_pow(h, delta));
        zqt_div_zq(r, divisor);
        b = r;
        if (zqt_zero(b)) return {{mpz_class(1)}};
        g = a.back();
        if (delta > 0) h = zq_divexact(zq_pow(g, delta), zq_pow(h, delta - 1));
        if (zqt_deg(b) == 0) return {{mpz_class(1)}};
    }
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    auto normalize_sign = [](IntPoly p) {
        if (!p.is_zero() && p.lead_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    ZQT A = to_zqt(a), B = to_zqt(b);
    ZQ ca = zqt_content(A), cb = zqt_content(B);
    zqt_div_zq(A, ca);
    zqt_div_zq(B, cb);
    ZQ c = zq_gcd(ca, cb);
    ZQT pg = zqt_prs_gcd(A, B);
    ZQT full = zqt_scale(pg, c);
    return normalize_sign(from_zqt(full));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return IntPoly();
    ZQT A = to_zqt(a), B = to_zqt(b);
    assert(zqt_deg(A) >= zqt_deg(B));
    ZQT quo(zqt_deg(A) - zqt_deg(B) + 1);
    while (!zqt_zero(A)) {
        assert(zqt_deg(A) >= zqt_deg(B));
        int d = zqt_deg(A) - zqt_deg(B);
        ZQ qc = zq_divexact(A.back(), B.back());
        quo[d] = qc;
        ZQT sb(d);
        for (auto& cf : B) sb.push_back(cf);
        A = zqt_sub(A, zqt_scale(sb, qc));
    }
    return from_zqt(quo);
}

}  // namespace vvmacd
