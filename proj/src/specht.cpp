#include "vvmacd/specht.hpp"

#include <sstream>

namespace vvmacd {

SpechtVector SpechtVector::unit(const Syt& tau) {
  SpechtVector v(tau.shape());
  v.terms_.emplace(tau, RatQT(1));
  return v;
}

RatQT SpechtVector::coeff(const Syt& tau) const {
  auto it = terms_.find(tau);
  return it == terms_.end() ? RatQT() : it->second;
}

void SpechtVector::add_term(const Syt& tau, const RatQT& c) {
  if (c.is_zero()) return;
  if (shape_.size() == 0 && terms_.empty()) shape_ = tau.shape();
  if (tau.shape() != shape_) throw tableau_error("shape mismatch");
  auto [it, fresh] = terms_.emplace(tau, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpechtVector& SpechtVector::operator+=(const SpechtVector& o) {
  for (const auto& [tau, c] : o.terms_) add_term(tau, c);
  return *this;
}

SpechtVector& SpechtVector::operator-=(const SpechtVector& o) {
  for (const auto& [tau, c] : o.terms_) add_term(tau, -c);
  return *this;
}

SpechtVector& SpechtVector::operator*=(const RatQT& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [tau, coef] : terms_) coef *= c;
  return *this;
}

std::string SpechtVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [tau, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*e[" << tau.str() << "]";
  }
  return os.str();
}

namespace {

// T_i on one seminormal basis vector; 1-based adjacent labels i, i+1.
void apply_T_term(int i, const Syt& tau, const RatQT& c, SpechtVector& out) {
  Box b1 = tau.box_of(i), b2 = tau.box_of(i + 1);
  if (b1.row == b2.row) {
    out.add_term(tau, c);
    return;
  }
  if (b1.col == b2.col) {
    out.add_term(tau, -(c * laurent_monomial(0, 1)));
    return;
  }
  int c1 = content(b1), c2 = content(b2);
  RatQT t1 = laurent_monomial(0, c1), t2 = laurent_monomial(0, c2);
  RatQT diag = (RatQT(1) - laurent_monomial(0, 1)) * t1 / (t1 - t2);
  Psyt swapped = *s_i(Psyt::from_syt(tau), i);
  Syt other = swapped.to_syt();
  out.add_term(tau, c * diag);
  if (c1 - c2 > 1) {
    out.add_term(other, c);
  } else {
    RatQT t1u = laurent_monomial(0, c1 + 1), t2u = laurent_monomial(0, c2 + 1);
    RatQT off = -((t2u - t1) * (t1u - t2)) / ((t2 - t1) * (t2 - t1));
    out.add_term(other, c * off);
  }
}

}  // namespace

SpechtVector act_T(int i, const SpechtVector& v) {
  if (i < 1 || i + 1 > v.shape().size()) throw tableau_error("generator index");
  SpechtVector out(v.shape());
  for (const auto& [tau, c] : v.terms()) apply_T_term(i, tau, c, out);
  return out;
}

SpechtVector act_T_inv(int i, const SpechtVector& v) {
  // (T_i + (t-1)) / t
  SpechtVector out = act_T(i, v);
  out += v * (laurent_monomial(0, 1) - RatQT(1));
  out *= laurent_monomial(0, -1);
  return out;
}

SpechtVector act_theta_bar(int i, const SpechtVector& v) {
  if (i < 1 || i > v.shape().size()) throw tableau_error("generator index");
  SpechtVector out(v.shape());
  for (const auto& [tau, c] : v.terms())
    out.add_term(tau, c * laurent_monomial(0, tau.content_of(i)));
  return out;
}

SpechtVector act_phi_bar(int i, const SpechtVector& v) {
  RatQT t = laurent_monomial(0, 1);
  SpechtVector lhs = act_T_inv(i, act_theta_bar(i, v)) * t;
  SpechtVector rhs = act_theta_bar(i, act_T_inv(i, v) * t);
  return lhs - rhs;
}

SpechtVector restrict_label(const SpechtVector& v) {
  const Shape& s = v.shape();
  int n = s.size();
  if (n == 0) throw tableau_error("cannot restrict the empty shape");
  std::vector<int> rows;
  for (int r = 1; r <= s.rows(); ++r) rows.push_back(s.row_len(r));
  Box corner{1, rows[0]};
  rows[0] -= 1;
  if (rows[0] == 0 && rows.size() > 1) throw tableau_error("cannot shorten first row");
  if (rows.size() > 1 && rows[0] < rows[1]) throw tableau_error("cannot shorten first row");
  if (rows[0] == 0) rows.clear();
  Shape target(rows);
  SpechtVector out(target);
  for (const auto& [tau, c] : v.terms()) {
    if (tau.box_of(n) != corner) continue;
    std::vector<std::vector<int>> labels = tau.rows();
    labels[0].pop_back();
    if (labels[0].empty()) labels.erase(labels.begin());
    out.add_term(Syt(target, std::move(labels)), c);
  }
  return out;
}

SpechtVector symmetrize(const SpechtVector& v) {
  return hecke_symmetrize(v.shape().size(), v,
                          [](int i, const SpechtVector& u) { return act_T(i, u); });
}

}  // namespace vvmacd
