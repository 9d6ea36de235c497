#include "vvmacd/identities.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "vvmacd/macdonald.hpp"
#include "vvmacd/parallel.hpp"

namespace vvmacd {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// (1 - q^{dv} t^{dc-1}) / (1 - q^{dv} t^{dc+1}); with q sent to infinity only
// dv = 0 keeps a nontrivial factor (dv is never positive on inversion pairs).
RatQT pair_factor(int dv, int dc, bool drop_q) {
  const RatQT one(1);
  if (drop_q && dv != 0) return one;
  const int a = drop_q ? 0 : dv;
  return (one - laurent_monomial(a, dc - 1)) /
         (one - laurent_monomial(a, dc + 1));
}

template <typename Tableau, typename Labelling>
RatQT series_term(const Tableau& tau, const Labelling& T, bool drop_q) {
  auto pairs = inversions(tau);
  RatQT out = laurent_monomial(0, static_cast<int>(pairs.size()));
  for (const auto& [b1, b2] : pairs)
    out = out * pair_factor(T.value(b2) - T.value(b1),
                            content(b2) - content(b1), drop_q);
  return out;
}

// Limit of the symmetrization constants; with drop_q the box product keeps
// only value-zero boxes and the inversion product only equal-value pairs.
RatQT limit_k_impl(const AsymLabelling& T, bool drop_q) {
  const int rk = T.rank();
  if (rk == 0) return RatQT(1);
  const Ryt fin = T.restrict(rk);
  const RatQT one(1);
  const int pad = rk - T.base().size();

  RatQT out = mu_factorial(mu_of(fin)) * (one - laurent_monomial(0, 1)).pow(rk);
  for (Box b : fin.shape().boxes_row_major()) {
    if (drop_q && fin.value(b) != 0) continue;
    const int a = drop_q ? 0 : -fin.value(b);
    out = out / (one - laurent_monomial(a, pad - content(b)));
  }
  for (const auto& [b1, b2] : inversions(min_of(fin))) {
    const int dv = fin.value(b2) - fin.value(b1);
    if (drop_q && dv != 0) continue;
    const int a = drop_q ? 0 : dv;
    const int dc = content(b2) - content(b1);
    out = out * (one - laurent_monomial(a, dc + 1)) /
          (one - laurent_monomial(a, dc));
  }
  return out;
}

// Expansion whose known range reaches at least t^hi.
TSeries expand_through(const RatQT& f, long hi) {
  if (f.is_zero()) return TSeries(hi, {RatQT(0)});
  TSeries probe = to_series(f, 0);
  long need = hi - probe.val();
  return need <= 0 ? probe : to_series(f, static_cast<int>(need));
}

bool agree_through(const TSeries& a, const TSeries& b, long order) {
  for (long e = std::min(a.val(), b.val()); e <= order; ++e)
    if (!(a.at(e) == b.at(e))) return false;
  return true;
}

IdentityReport truncated_report(const AsymLabelling& T, int order,
                                bool drop_q) {
  const auto start = Clock::now();
  TSeries lhs = expand_through(limit_k_impl(T, drop_q).inv(), order);

  std::vector<Apsyt> taus = enumerate_apsyt(T, apsyt_rank_bound(T, order));
  std::vector<TSeries> parts =
      parallel_map(taus.size(), [&](std::size_t i) {
        return expand_through(series_term(taus[i], T, drop_q), order);
      });
  TSeries rhs(0, std::vector<RatQT>(static_cast<std::size_t>(order) + 1));
  for (const TSeries& p : parts) rhs += p;

  IdentityReport rep;
  rep.labelling = T.str();
  rep.mode = IdentityMode::asymptotic_truncated;
  rep.order = order;
  rep.verdict = agree_through(lhs, rhs, order);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.term_count = static_cast<long long>(taus.size());
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace

IdentityReport finite_identity(const Ryt& T) {
  const auto start = Clock::now();
  const std::vector<Psyt> fiber = enumerate_psyt(T);
  std::vector<RatQT> terms = parallel_map(fiber.size(), [&](std::size_t i) {
    return series_term(fiber[i], T, false);
  });
  RatQT rhs(0);
  for (const RatQT& term : terms) rhs = rhs + term;
  const RatQT lhs = k_coeff(T).inv();

  IdentityReport rep;
  rep.labelling = T.str();
  rep.mode = IdentityMode::finite_exact;
  rep.verdict = lhs == rhs;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.term_count = static_cast<long long>(fiber.size());
  rep.elapsed_ms = ms_since(start);
  return rep;
}

RatQT limit_k(const AsymLabelling& T) { return limit_k_impl(T, false); }

int apsyt_rank_bound(const AsymLabelling& T, int order) {
  const int rk = T.rank();
  return std::max(order + rk + rk * (rk - 1), std::max(rk, 1));
}

IdentityReport asymptotic_identity(const AsymLabelling& T, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  return truncated_report(T, order, false);
}

IdentityReport q_infinity_identity(const AsymLabelling& T, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  return truncated_report(T, order, true);
}

}  // namespace vvmacd
