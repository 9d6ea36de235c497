#pragma once

#include <map>
#include <string>
#include <vector>

#include "vvmacd/ratqt.hpp"
#include "vvmacd/specht.hpp"
#include "vvmacd/tableaux.hpp"

namespace vvmacd {

// Element of the induced module over a diagram with n boxes: a finite
// combination of X^alpha (x) e_tau with alpha in Z_{>=0}^n and tau standard.
// Terms are stored fiber-wise, exponent vector -> Specht part.
class VElement {
 public:
  VElement() = default;
  explicit VElement(Shape shape) : shape_(std::move(shape)) {}

  static VElement monomial(const Shape& shape, const std::vector<int>& alpha,
                           const Syt& tau);

  const Shape& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  bool is_zero() const { return fibers_.empty(); }
  const std::map<std::vector<int>, SpechtVector>& fibers() const {
    return fibers_;
  }

  SpechtVector fiber(const std::vector<int>& alpha) const;
  RatQT coeff(const std::vector<int>& alpha, const Syt& tau) const;
  void add_term(const std::vector<int>& alpha, const Syt& tau, const RatQT& c);
  void add_fiber(const std::vector<int>& alpha, const SpechtVector& part);

  VElement& operator+=(const VElement& o);
  VElement& operator-=(const VElement& o);
  VElement& operator*=(const RatQT& c);
  friend VElement operator+(VElement a, const VElement& b) { return a += b; }
  friend VElement operator-(VElement a, const VElement& b) { return a -= b; }
  friend VElement operator*(VElement a, const RatQT& c) { return a *= c; }
  friend VElement operator*(const RatQT& c, VElement a) { return a *= c; }
  VElement operator-() const;

  bool operator==(const VElement& o) const {
    return shape_ == o.shape_ && fibers_ == o.fibers_;
  }
  bool operator!=(const VElement& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Shape shape_;
  std::map<std::vector<int>, SpechtVector> fibers_;
};

// Multiplication by the monomial X^alpha.
VElement mul_X(const std::vector<int>& alpha, const VElement& v);
// Multiplication by the elementary symmetric polynomial e_r(X_1..X_n).
VElement mul_e_r(int r, const VElement& v);

// tT_i^{-1} pushed through monomials onto the fiber action; T_i and T_i^{-1}
// follow from the quadratic relation (T_i - 1)(T_i + t) = 0.
VElement act_tTinv_on_V(int i, const VElement& v);
VElement act_T_on_V(int i, const VElement& v);
VElement act_Tinv_on_V(int i, const VElement& v);

// pi_n rotates exponents, alpha -> (alpha_n, alpha_1, ..), with a factor
// q^{alpha_n}, and acts on fibers by t^{n-1} T_1^{-1} ... T_{n-1}^{-1}.
VElement act_pi(const VElement& v);
VElement act_pi_inv(const VElement& v);
// gamma_n = X_n T_{n-1} ... T_1.
VElement act_gamma(const VElement& v);
// theta_i = t^{-(n-i)} T_{i-1}^{-1} ... T_1^{-1} pi_n T_{n-1} ... T_i.
VElement act_theta(int i, const VElement& v);

// Trivial-idempotent symmetrization with respect to the T_i action.
VElement symmetrize(const VElement& v);

// Drop the last variable (terms with nonzero last exponent die) and the
// largest tableau label, mapping down to the diagram with one fewer box.
VElement connecting_map(const VElement& v);

}  // namespace vvmacd
