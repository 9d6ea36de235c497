#pragma once

#include <string>
#include <variant>

#include "vvmacd/asym.hpp"
#include "vvmacd/ratqt.hpp"
#include "vvmacd/tableaux.hpp"
#include "vvmacd/tseries.hpp"

namespace vvmacd {

enum class IdentityMode { finite_exact, asymptotic_truncated };

// Both sides of a product-series comparison plus the verdict: exact equality
// of rational functions in the finite mode, coefficientwise agreement of
// t-expansions through `order` otherwise.
struct IdentityReport {
  std::string labelling;
  IdentityMode mode = IdentityMode::finite_exact;
  int order = 0;
  bool verdict = false;
  std::variant<RatQT, TSeries> lhs, rhs;
  long long term_count = 0;
  long long elapsed_ms = 0;
};

// Exact identity on one diagram: the reciprocal of the symmetrization
// constant equals the inversion-weighted sum over the fiber of T.
IdentityReport finite_identity(const Ryt& T);

// Closed form for the limit of the symmetrization constants along growing
// diagrams: a box product over the rank-sized diagram against the factorial
// normalizer, times an inversion product over the minimal fiber member.
RatQT limit_k(const AsymLabelling& T);

// How far out tableaux must be enumerated so that every term ignored has
// t-valuation beyond `order`.  Deliberately conservative.
int apsyt_rank_bound(const AsymLabelling& T, int order);

// Compares the t-expansion of 1/limit_k with the tableau series through the
// given order.
IdentityReport asymptotic_identity(const AsymLabelling& T, int order);

// Same comparison after sending q to infinity: only factors joining boxes of
// equal value survive and both sides become series with constant coefficients.
IdentityReport q_infinity_identity(const AsymLabelling& T, int order);

}  // namespace vvmacd
