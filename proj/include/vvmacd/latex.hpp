#pragma once

#include <string>
#include <vector>

#include "vvmacd/asym.hpp"
#include "vvmacd/identities.hpp"
#include "vvmacd/macdonald.hpp"
#include "vvmacd/pieri.hpp"
#include "vvmacd/ratqt.hpp"
#include "vvmacd/tableaux.hpp"
#include "vvmacd/tseries.hpp"
#include "vvmacd/velement.hpp"

namespace vvmacd {

// Monomials as q^{a}t^{b} in descending term order, unit coefficients and
// exponents suppressed.
std::string latex_of(const IntPoly& p);
// \frac{num}{den} unless the denominator is one.
std::string latex_of(const RatQT& f);
// Explicit terms plus an O(t^{hi+1}) tail marker.
std::string latex_of(const TSeries& s);
// Rows joined by bars: subscripts like 2\,1|0.
std::string latex_rows(const Ryt& T);
std::string latex_rows(const Syt& s);
// Cells as iq^{b}, power zero bare: 1q|2.
std::string latex_rows(const Psyt& tau);
std::string latex_rows(const AsymLabelling& T);
// Sum of (coeff) X^{(alpha)} \otimes e_{tau} terms.
std::string latex_of(const VElement& v);
// P_{T} = sum of (coeff) F_{tau} over the fiber.
std::string latex_of(const MacdonaldP& P);
// e_r-expansion row: e_{r} P_{T} = sum of (coeff) P_{S}.
std::string latex_of(const PieriRow& row);
std::string latex_of(const StablePieriRow& row);
// lhs = rhs with the verdict as a comment.
std::string latex_of(const IdentityReport& rep);

}  // namespace vvmacd
