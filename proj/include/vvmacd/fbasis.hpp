#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vvmacd/tableaux.hpp"
#include "vvmacd/velement.hpp"

namespace vvmacd {

// All weight-basis elements F_tau on one diagram with label powers bounded by
// power_bound, built once from the standard-tableau seeds and then frozen.
// Each F_tau is a simultaneous theta-eigenvector; its weight is the list
// (w_tau(i), c_tau(i)) of q- and t-exponents, distinct across the cache.
class FBasisCache {
 public:
  FBasisCache(Shape shape, int power_bound, bool verify_weights = false);
  // Restricted variant: only the fibers of the given labellings plus whatever
  // the recursion reaches below them. expand_in_F needs the full cache.
  FBasisCache(Shape shape, const std::vector<Ryt>& targets,
              bool verify_weights = false);

  const Shape& shape() const { return shape_; }
  int power_bound() const { return bound_; }

  bool contains(const Psyt& tau) const { return table_.count(tau) > 0; }
  const VElement& f(const Psyt& tau) const;
  const std::vector<std::pair<int, int>>& weight(const Psyt& tau) const;
  // Specht part of the X^{w_tau} fiber, the top of the triangular expansion.
  const SpechtVector& leading_fiber(const Psyt& tau) const;
  const std::map<Psyt, VElement>& all() const { return table_; }
  // Cached fillings whose power vector equals w, in filling order.
  const std::vector<Psyt>& taus_with_exponent(const std::vector<int>& w) const;

 private:
  const VElement& build(const Psyt& tau);

  Shape shape_;
  int bound_ = 0;
  bool verify_ = false;
  std::map<Psyt, VElement> table_;
  std::map<Psyt, std::vector<std::pair<int, int>>> weights_;
  std::map<Psyt, SpechtVector> leading_;
  std::map<std::vector<int>, std::vector<Psyt>> by_exponent_;
};

// Coefficients of v in the F basis, found by eliminating the highest
// remaining exponent fiber at each step (the expansion of every F is
// triangular); ties between incomparable exponents are broken by the
// decreasing rearrangement, then inversion count, then lex.
// Throws if v is not in the span of the cache.
std::map<Psyt, RatQT> expand_in_F(const VElement& v, const FBasisCache& cache);

// sum_i theta_i^ell; negative ell is resolved diagonally through the F basis.
VElement theta_power_sum(int ell, const VElement& v, const FBasisCache& cache);

}  // namespace vvmacd
