#pragma once

#include <map>

#include "vvmacd/asym.hpp"
#include "vvmacd/fbasis.hpp"
#include "vvmacd/tableaux.hpp"
#include "vvmacd/velement.hpp"

namespace vvmacd {

// Symmetric vector-valued Macdonald function in finitely many variables: the
// unique Hecke-invariant element supported on one labelling fiber whose
// coefficient on the column-superstandard filling is 1.
struct MacdonaldP {
  Ryt labelling;
  std::map<Psyt, RatQT> f_expansion;
  VElement element;
};

// Stable Macdonald function held through a finite proxy. The connecting map
// carries the rank-(n+1) proxy onto the rank-n one, so every realized rank at
// least rank(labelling) presents the same limit object.
struct StableMacD {
  AsymLabelling labelling;
  int realized_rank;
  MacdonaldP proxy;
};

// Coefficient of the weight vector of tau in P over tau's own fiber: the
// product over inversion pairs of
//   (q^{T(b1)} t^{c(b1)+1} - q^{T(b2)} t^{c(b2)}) /
//   (q^{T(b1)} t^{c(b1)}   - q^{T(b2)} t^{c(b2)}).
// Requires p_of(tau) == T.
RatQT p_coeff(const Psyt& tau, const Ryt& T);

// Ratio symmetrize(F_tau) / symmetrize(F_top): the same product with the
// extra t on the denominator side instead,
//   (q^{T(b1)} t^{c(b1)} - q^{T(b2)} t^{c(b2)}) /
//   (q^{T(b1)} t^{c(b1)} - q^{T(b2)} t^{c(b2)+1}).
RatQT sym_ratio(const Psyt& tau, const Ryt& T);

// Scalar with symmetrize(F_top) = k_coeff(T) * P_T; its reciprocal is the
// subject of the finite product-series identity.
RatQT k_coeff(const Ryt& T);

// Assembles P_T from the fiber of T. The cache must live on T's shape with
// power bound at least the largest entry of T; verify re-checks Hecke
// invariance of the result. Throws if T does not decrease strictly down
// columns (no invariant element exists over such a fiber).
MacdonaldP build_P(const Ryt& T, const FBasisCache& cache, bool verify = false);
MacdonaldP build_P(const Ryt& T);

// Finite proxy at max(requested_rank, rank of the labelling).
StableMacD build_stable(const AsymLabelling& T, int requested_rank = 0);

// Eigenvalue of the theta power sum sum_j theta_j^ell on P_T: each box
// contributes q^{ell T(box)} t^{ell c(box)}.
RatQT eigenvalue_P0l(const Ryt& T, int ell);
// Stable counterpart: each box contributes (q^{ell T(box)} - 1) t^{ell c(box)},
// so boxes beyond the support drop out.
RatQT eigenvalue_P0l(const AsymLabelling& T, int ell);

// Sum of t^{ell c(box)} over a finite diagram; recentering the finite power
// sum by this yields the stable eigenvalue.
RatQT content_t_sum(const Shape& s, int ell);

// True iff the connecting map sends the proxy built at rank n+1 to the proxy
// at rank n, exactly. Requires n >= rank of the labelling.
bool stability_check(const AsymLabelling& T, int n);

// True iff the diagonal content generating polynomials of the two shapes
// differ (which happens exactly for distinct shapes).
bool distinguish_shapes(const Partition& a, const Partition& b);

}  // namespace vvmacd
