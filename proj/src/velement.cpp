#include "vvmacd/velement.hpp"

#include <sstream>

namespace vvmacd {

namespace {

void check_alpha(const Shape& shape, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != shape.size())
    throw tableau_error("exponent vector length mismatch");
  for (int a : alpha)
    if (a < 0) throw tableau_error("negative exponent");
}

// tT_i^{-1} on a Specht fiber: T_i + (t-1).
SpechtVector fiber_u(int i, const SpechtVector& v) {
  SpechtVector out = act_T(i, v);
  out += v * (laurent_monomial(0, 1) - RatQT(1));
  return out;
}

}  // namespace

VElement VElement::monomial(const Shape& shape, const std::vector<int>& alpha,
                            const Syt& tau) {
  VElement out(shape);
  out.add_term(alpha, tau, RatQT(1));
  return out;
}

SpechtVector VElement::fiber(const std::vector<int>& alpha) const {
  auto it = fibers_.find(alpha);
  return it != fibers_.end() ? it->second : SpechtVector(shape_);
}

RatQT VElement::coeff(const std::vector<int>& alpha, const Syt& tau) const {
  auto it = fibers_.find(alpha);
  return it != fibers_.end() ? it->second.coeff(tau) : RatQT(0);
}

void VElement::add_term(const std::vector<int>& alpha, const Syt& tau,
                        const RatQT& c) {
  if (shape_ == Shape() && fibers_.empty()) shape_ = tau.shape();
  check_alpha(shape_, alpha);
  if (tau.shape() != shape_) throw tableau_error("tableau shape mismatch");
  auto it = fibers_.try_emplace(alpha, shape_).first;
  it->second.add_term(tau, c);
  if (it->second.is_zero()) fibers_.erase(it);
}

void VElement::add_fiber(const std::vector<int>& alpha,
                         const SpechtVector& part) {
  if (part.is_zero()) return;
  if (shape_ == Shape() && fibers_.empty()) shape_ = part.shape();
  check_alpha(shape_, alpha);
  if (part.shape() != shape_) throw tableau_error("tableau shape mismatch");
  auto it = fibers_.try_emplace(alpha, shape_).first;
  it->second += part;
  if (it->second.is_zero()) fibers_.erase(it);
}

VElement& VElement::operator+=(const VElement& o) {
  for (const auto& [alpha, part] : o.fibers_) add_fiber(alpha, part);
  return *this;
}

VElement& VElement::operator-=(const VElement& o) {
  for (const auto& [alpha, part] : o.fibers_) {
    SpechtVector neg(part.shape());
    neg -= part;
    add_fiber(alpha, neg);
  }
  return *this;
}

VElement& VElement::operator*=(const RatQT& c) {
  if (c.is_zero()) {
    fibers_.clear();
    return *this;
  }
  for (auto& [alpha, part] : fibers_) part *= c;
  return *this;
}

VElement VElement::operator-() const {
  VElement out(shape_);
  out -= *this;
  return out;
}

std::string VElement::str() const {
  if (fibers_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, part] : fibers_) {
    if (!first) os << " + ";
    first = false;
    os << "X^(";
    for (size_t k = 0; k < alpha.size(); ++k)
      os << (k ? "," : "") << alpha[k];
    os << ") (x) [" << part.str() << "]";
  }
  return os.str();
}

VElement mul_X(const std::vector<int>& alpha, const VElement& v) {
  check_alpha(v.shape(), alpha);
  VElement out(v.shape());
  for (const auto& [beta, part] : v.fibers()) {
    std::vector<int> shifted = beta;
    for (size_t k = 0; k < shifted.size(); ++k) shifted[k] += alpha[k];
    out.add_fiber(shifted, part);
  }
  return out;
}

VElement mul_e_r(int r, const VElement& v) {
  int n = v.n();
  if (r < 0 || r > n) throw tableau_error("elementary degree out of range");
  VElement out(v.shape());
  std::vector<int> pick(r);
  for (int k = 0; k < r; ++k) pick[k] = k;
  while (true) {
    std::vector<int> alpha(n, 0);
    for (int k : pick) alpha[k] = 1;
    out += mul_X(alpha, v);
    int j = r - 1;
    while (j >= 0 && pick[j] == n - r + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int k = j + 1; k < r; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

VElement act_tTinv_on_V(int i, const VElement& v) {
  int n = v.n();
  if (i < 1 || i + 1 > n) throw tableau_error("generator index");
  const RatQT t_minus_1 = laurent_monomial(0, 1) - RatQT(1);
  const RatQT one_minus_t = -t_minus_1;
  VElement out(v.shape());
  for (const auto& [alpha, part] : v.fibers()) {
    int a = alpha[i - 1], b = alpha[i];
    if (a == b) {
      out.add_fiber(alpha, fiber_u(i, part));
      continue;
    }
    std::vector<int> swapped = alpha;
    std::swap(swapped[i - 1], swapped[i]);
    out.add_fiber(swapped, fiber_u(i, part));
    if (a < b) {
      // u X_{i+1}^k = X_i^k u + (t-1) sum_j X_i^{k-j} X_{i+1}^j, j = 1..k
      std::vector<int> beta = alpha;
      for (int j = 0; j < b - a; ++j) {
        out.add_fiber(beta, part * t_minus_1);
        beta[i - 1] += 1;
        beta[i] -= 1;
      }
    } else {
      // u X_i^k = X_{i+1}^k u - (t-1) sum_j X_{i+1}^{k-j} X_i^j, j = 0..k-1
      std::vector<int> beta = swapped;
      for (int j = 0; j < a - b; ++j) {
        out.add_fiber(beta, part * one_minus_t);
        beta[i - 1] += 1;
        beta[i] -= 1;
      }
    }
  }
  return out;
}

VElement act_T_on_V(int i, const VElement& v) {
  VElement out = act_tTinv_on_V(i, v);
  out -= v * (laurent_monomial(0, 1) - RatQT(1));
  return out;
}

VElement act_Tinv_on_V(int i, const VElement& v) {
  return act_tTinv_on_V(i, v) * laurent_monomial(0, -1);
}

VElement act_pi(const VElement& v) {
  int n = v.n();
  if (n < 1) throw tableau_error("empty diagram");
  VElement out(v.shape());
  for (const auto& [alpha, part] : v.fibers()) {
    std::vector<int> rotated(n);
    rotated[0] = alpha[n - 1];
    for (int k = 1; k < n; ++k) rotated[k] = alpha[k - 1];
    SpechtVector sv = part;
    for (int j = n - 1; j >= 1; --j) sv = act_T_inv(j, sv);
    sv *= laurent_monomial(alpha[n - 1], n - 1);
    out.add_fiber(rotated, sv);
  }
  return out;
}

VElement act_pi_inv(const VElement& v) {
  int n = v.n();
  if (n < 1) throw tableau_error("empty diagram");
  VElement out(v.shape());
  for (const auto& [alpha, part] : v.fibers()) {
    std::vector<int> rotated(n);
    for (int k = 0; k + 1 < n; ++k) rotated[k] = alpha[k + 1];
    rotated[n - 1] = alpha[0];
    SpechtVector sv = part;
    for (int j = 1; j <= n - 1; ++j) sv = act_T(j, sv);
    sv *= laurent_monomial(-alpha[0], -(n - 1));
    out.add_fiber(rotated, sv);
  }
  return out;
}

VElement act_gamma(const VElement& v) {
  int n = v.n();
  if (n < 1) throw tableau_error("empty diagram");
  VElement out = v;
  for (int j = 1; j <= n - 1; ++j) out = act_T_on_V(j, out);
  std::vector<int> xn(n, 0);
  xn[n - 1] = 1;
  return mul_X(xn, out);
}

VElement act_theta(int i, const VElement& v) {
  int n = v.n();
  if (i < 1 || i > n) throw tableau_error("generator index");
  VElement out = v;
  for (int j = i; j <= n - 1; ++j) out = act_T_on_V(j, out);
  out = act_pi(out);
  for (int j = 1; j <= i - 1; ++j) out = act_Tinv_on_V(j, out);
  return out * laurent_monomial(0, -(n - i));
}

VElement symmetrize(const VElement& v) {
  return hecke_symmetrize(v.n(), v, [](int i, const VElement& u) {
    return act_T_on_V(i, u);
  });
}

VElement connecting_map(const VElement& v) {
  int n1 = v.n();
  if (n1 < 1) throw tableau_error("empty diagram");
  VElement out;
  for (const auto& [alpha, part] : v.fibers()) {
    if (alpha[n1 - 1] != 0) continue;
    std::vector<int> head(alpha.begin(), alpha.end() - 1);
    out.add_fiber(head, restrict_label(part));
  }
  if (out.shape() == Shape() && out.is_zero()) {
    // preserve the target shape even when everything was annihilated
    SpechtVector probe = restrict_label(SpechtVector(v.shape()));
    out = VElement(probe.shape());
  }
  return out;
}

}  // namespace vvmacd
