#include "vvmacd/macdonald.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "vvmacd/parallel.hpp"

namespace vvmacd {

namespace {

// product over inversion pairs of (x t^sn - y) / (x - y t^sd) with
// x = q^{T(b1)} t^{c(b1)}, y = q^{T(b2)} t^{c(b2)}
RatQT inversion_product(const Psyt& tau, const Ryt& T, int shift_num,
                        int shift_den) {
  RatQT out(1);
  for (const auto& [b1, b2] : inversions(tau)) {
    RatQT x = laurent_monomial(T.value(b1), content(b1) + shift_num);
    RatQT y = laurent_monomial(T.value(b2), content(b2) + shift_den);
    RatQT x0 = laurent_monomial(T.value(b1), content(b1));
    RatQT y0 = laurent_monomial(T.value(b2), content(b2));
    out = out * (x - y0) / (x0 - y);
  }
  return out;
}

}  // namespace

RatQT p_coeff(const Psyt& tau, const Ryt& T) {
  return inversion_product(tau, T, 1, 0);
}

RatQT sym_ratio(const Psyt& tau, const Ryt& T) {
  return inversion_product(tau, T, 0, 1);
}

RatQT k_coeff(const Ryt& T) {
  RatQT out = mu_factorial(mu_of(T)) / t_factorial(T.n());
  const RatQT t = laurent_monomial(0, 1);
  for (const auto& [b1, b2] : inversions(min_of(T))) {
    RatQT x = laurent_monomial(T.value(b1), content(b1));
    RatQT y = laurent_monomial(T.value(b2), content(b2));
    out = out * (x - y * t) / (x - y);
  }
  return out;
}

MacdonaldP build_P(const Ryt& T, const FBasisCache& cache, bool verify) {
  if (!T.is_rssyt())
    throw std::invalid_argument(
        "build_P: labelling must decrease strictly down columns");
  if (cache.shape() != T.shape() || cache.power_bound() < T.max_value())
    throw std::invalid_argument("build_P: cache does not cover the labelling");

  std::vector<Psyt> fiber = enumerate_psyt(T);
  auto parts = parallel_map(fiber.size(), [&](std::size_t i) {
    RatQT kappa = p_coeff(fiber[i], T);
    return std::make_pair(kappa, cache.f(fiber[i]) * kappa);
  });

  MacdonaldP out{T, {}, VElement(T.shape())};
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    out.f_expansion.emplace(fiber[i], std::move(parts[i].first));
    out.element += parts[i].second;
  }

  if (verify) {
    for (int i = 1; i < T.n(); ++i)
      if (act_T_on_V(i, out.element) != out.element)
        throw std::logic_error("build_P: element is not Hecke invariant");
  }
  return out;
}

MacdonaldP build_P(const Ryt& T) {
  if (!T.is_rssyt())
    throw std::invalid_argument(
        "build_P: labelling must decrease strictly down columns");
  FBasisCache cache(T.shape(), std::vector<Ryt>{T});
  return build_P(T, cache);
}

StableMacD build_stable(const AsymLabelling& T, int requested_rank) {
  int n = std::max(requested_rank, T.rank());
  return StableMacD{T, n, build_P(T.restrict(n))};
}

RatQT eigenvalue_P0l(const Ryt& T, int ell) {
  if (ell == 0) throw std::invalid_argument("eigenvalue_P0l: ell must be nonzero");
  RatQT out;
  for (const Box& b : T.shape().boxes_row_major())
    out = out + laurent_monomial(ell * T.value(b), ell * content(b));
  return out;
}

RatQT eigenvalue_P0l(const AsymLabelling& T, int ell) {
  if (ell == 0) throw std::invalid_argument("eigenvalue_P0l: ell must be nonzero");
  RatQT out;
  auto add_box = [&](int value, int c) {
    if (value == 0) return;
    out = out + laurent_monomial(ell * value, ell * c) -
          laurent_monomial(0, ell * c);
  };
  const std::vector<int>& r1 = T.row1();
  for (std::size_t j = 0; j < r1.size(); ++j)
    add_box(r1[j], static_cast<int>(j));
  const std::vector<std::vector<int>>& low = T.lower();
  for (std::size_t i = 0; i < low.size(); ++i)
    for (std::size_t j = 0; j < low[i].size(); ++j)
      add_box(low[i][j], static_cast<int>(j) - static_cast<int>(i) - 1);
  return out;
}

RatQT content_t_sum(const Shape& s, int ell) {
  RatQT out;
  for (const Box& b : s.boxes_row_major())
    out = out + laurent_monomial(0, ell * content(b));
  return out;
}

bool stability_check(const AsymLabelling& T, int n) {
  if (n < T.rank())
    throw std::invalid_argument("stability_check: n below the labelling rank");
  MacdonaldP above = build_P(T.restrict(n + 1));
  MacdonaldP at = build_P(T.restrict(n));
  return connecting_map(above.element) == at.element;
}

bool distinguish_shapes(const Partition& a, const Partition& b) {
  auto diagonal_counts = [](const Partition& p) {
    std::map<int, int> counts;
    for (int i = 1; i <= p.length(); ++i)
      for (int j = 1; j <= p.part(i); ++j) ++counts[j - i];
    return counts;
  };
  return diagonal_counts(a) != diagonal_counts(b);
}

}  // namespace vvmacd
