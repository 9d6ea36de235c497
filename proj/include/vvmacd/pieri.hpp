#pragma once

#include <map>

#include "vvmacd/asym.hpp"
#include "vvmacd/ratqt.hpp"
#include "vvmacd/tableaux.hpp"

namespace vvmacd {

// One row of the multiplication rule by an elementary symmetric polynomial:
// e_r(X_1..X_n) P_source = sum over targets of coeff * P_target.  The targets
// are exactly the labellings obtained from the source by adding 1 to r
// distinct boxes while staying weakly increasing along rows and strictly
// increasing up columns; every such labelling appears as a key, with whatever
// coefficient the sum produces.
struct PieriRow {
  Ryt source;
  int r = 1;
  std::map<Ryt, RatQT> entries;
};

// Rank-free version of a row: labellings of the infinite padded diagram and
// coefficients computed at the smallest rank past which they no longer move.
struct StablePieriRow {
  AsymLabelling source;
  int r = 1;
  int realized_rank = 0;
  std::map<AsymLabelling, RatQT> entries;
};

// Closed-form coefficients: a sum over the source fiber, each term weighted by
// the contents of the first r labels and two inversion products, scaled by
// t^{r(r-1)/2} e_r(1,t,..,t^{n-1}) and the target's symmetrization constant.
PieriRow pieri_finite(const Ryt& T, int r);

// Computes the row at rank max(requested_rank, rank(T) + r), where the
// coefficients have stabilized, and relabels source and targets.
StablePieriRow pieri_stable(const AsymLabelling& T, int r,
                            int requested_rank = 0);

// T_up must be obtainable from T by raising a single box; returns whether the
// degree-one coefficient joining them is a nonzero rational function.
bool check_e1_nonvanishing(const AsymLabelling& T, const AsymLabelling& T_up);

// Reaches P_{T_up} from P_T without the closed form: multiply by e_1, project
// onto the T_up eigenspace of the recentred theta sum (a product of linear
// factors over the other raises of T), divide by the connecting coefficient,
// and compare with the target proxy exactly.  Also checks the projection
// annihilates the proxy of every other raise.  True iff all of it holds.
bool cyclicity_step(const AsymLabelling& T, const AsymLabelling& T_up);

}  // namespace vvmacd
