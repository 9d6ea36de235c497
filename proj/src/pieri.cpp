#include "vvmacd/pieri.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vvmacd/fbasis.hpp"
#include "vvmacd/macdonald.hpp"
#include "vvmacd/parallel.hpp"
#include "vvmacd/velement.hpp"

namespace vvmacd {

namespace {

// All labellings reachable from T by adding 1 to r distinct boxes, kept when
// rows stay weakly decreasing left to right and columns strictly decrease
// downward.  The filling is validated before handing it to Ryt, whose
// constructor rejects invalid rows outright.
std::vector<Ryt> raise_targets(const Ryt& T, int r) {
  const Shape& shape = T.shape();
  std::vector<Box> boxes = shape.boxes_row_major();
  const int m = static_cast<int>(boxes.size());
  std::vector<Ryt> out;
  std::vector<int> pick;
  auto flush = [&] {
    std::vector<std::vector<int>> vals(shape.rows());
    for (int i = 1; i <= shape.rows(); ++i) {
      vals[i - 1].resize(shape.row_len(i));
      for (int j = 1; j <= shape.row_len(i); ++j)
        vals[i - 1][j - 1] = T.value({i, j});
    }
    for (int k : pick) ++vals[boxes[k].row - 1][boxes[k].col - 1];
    for (int i = 0; i < shape.rows(); ++i)
      for (int j = 0; j < shape.row_len(i + 1); ++j) {
        if (j > 0 && vals[i][j] > vals[i][j - 1]) return;
        if (i > 0 && vals[i][j] >= vals[i - 1][j]) return;
      }
    out.emplace_back(shape, std::move(vals));
  };
  auto rec = [&](auto&& self, int from, int left) -> void {
    if (left == 0) {
      flush();
      return;
    }
    for (int k = from; k + left <= m; ++k) {
      pick.push_back(k);
      self(self, k + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, r);
  return out;
}

}  // namespace

PieriRow pieri_finite(const Ryt& T, int r) {
  if (!T.is_rssyt()) throw std::invalid_argument("source labelling not valid");
  const int n = T.n();
  if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");

  // One pass over the source fiber: rotate the first r labels away, remember
  // where each tableau lands and the part of its weight that only depends on
  // the source side.
  struct Landed {
    Psyt shifted;
    Ryt fiber;
    RatQT base;
  };
  std::vector<Landed> landed;
  for (const Psyt& tau : enumerate_psyt(T)) {
    int csum = 0;
    for (int i = 1; i <= r; ++i) csum += tau.c(i);
    Psyt shifted = tau;
    for (int i = 0; i < r; ++i) shifted = psi(shifted);
    Ryt fiber = shifted.p_of();
    landed.push_back(Landed{std::move(shifted), std::move(fiber),
                            laurent_monomial(0, csum) * p_coeff(tau, T)});
  }

  const RatQT prefactor = e_r_principal(r, n);

  std::vector<Ryt> targets = raise_targets(T, r);
  std::vector<RatQT> coeffs =
      parallel_map(targets.size(), [&](std::size_t idx) {
        const Ryt& S = targets[idx];
        RatQT acc(0);
        for (const Landed& l : landed)
          if (l.fiber == S) acc = acc + l.base * sym_ratio(l.shifted, S);
        return prefactor * k_coeff(S) * acc;
      });

  PieriRow row{T, r, {}};
  for (std::size_t i = 0; i < targets.size(); ++i)
    row.entries.emplace(targets[i], coeffs[i]);
  return row;
}

StablePieriRow pieri_stable(const AsymLabelling& T, int r,
                            int requested_rank) {
  if (r < 1) throw std::invalid_argument("need r >= 1");
  const int n = std::max(requested_rank, T.rank() + r);
  PieriRow fin = pieri_finite(T.restrict(n), r);
  StablePieriRow row{T, r, n, {}};
  for (const auto& [S, coeff] : fin.entries)
    row.entries.emplace(AsymLabelling::from_finite(T.base(), S), coeff);
  return row;
}

namespace {

bool is_raise_of(const AsymLabelling& T, const AsymLabelling& T_up) {
  for (const auto& [box, up] : raising_pairs(T))
    if (up == T_up) return true;
  return false;
}

}  // namespace

bool check_e1_nonvanishing(const AsymLabelling& T, const AsymLabelling& T_up) {
  if (!is_raise_of(T, T_up))
    throw std::invalid_argument("second labelling is not a single raise");
  StablePieriRow row = pieri_stable(T, 1);
  auto it = row.entries.find(T_up);
  return it != row.entries.end() && !it->second.is_zero();
}

bool cyclicity_step(const AsymLabelling& T, const AsymLabelling& T_up) {
  if (!is_raise_of(T, T_up))
    throw std::invalid_argument("second labelling is not a single raise");
  const int n = T.rank() + 1;
  const Ryt fin_T = T.restrict(n);
  const Shape shape = fin_T.shape();

  std::vector<AsymLabelling> raises;
  std::vector<Ryt> fin_raises;
  for (const auto& [box, up] : raising_pairs(T)) {
    raises.push_back(up);
    fin_raises.push_back(up.restrict(n));
  }

  std::vector<Ryt> wanted = fin_raises;
  wanted.push_back(fin_T);
  FBasisCache cache(shape, wanted);

  const VElement base = build_P(fin_T, cache).element;
  std::vector<VElement> proxies;
  for (const Ryt& S : fin_raises) proxies.push_back(build_P(S, cache).element);

  // Degree-one theta sum with the content sum of the diagram removed; on each
  // raise proxy it acts by that raise's rank-free eigenvalue.
  const RatQT recentre = content_t_sum(shape, 1);
  auto op = [&](const VElement& v) {
    VElement out(shape);
    for (int i = 1; i <= n; ++i) out += act_theta(i, v);
    out -= v * recentre;
    return out;
  };

  const RatQT ev_up = eigenvalue_P0l(T_up, 1);
  std::vector<RatQT> evs;
  for (const AsymLabelling& S : raises) evs.push_back(eigenvalue_P0l(S, 1));

  auto project = [&](VElement v) {
    for (std::size_t k = 0; k < raises.size(); ++k) {
      if (raises[k] == T_up) continue;
      RatQT gap = ev_up - evs[k];
      if (gap.is_zero())
        throw std::logic_error("eigenvalue collision among raises");
      v = (op(v) - v * evs[k]) * gap.inv();
    }
    return v;
  };

  PieriRow row = pieri_finite(fin_T, 1);
  auto it = row.entries.find(T_up.restrict(n));
  if (it == row.entries.end() || it->second.is_zero()) return false;
  const RatQT d = it->second;

  if (!(project(mul_e_r(1, base)) * d.inv() ==
        proxies[static_cast<std::size_t>(
            std::find(raises.begin(), raises.end(), T_up) - raises.begin())]))
    return false;

  const VElement zero(shape);
  for (std::size_t k = 0; k < raises.size(); ++k) {
    if (raises[k] == T_up) continue;
    if (!(project(proxies[k]) == zero)) return false;
  }
  return true;
}

}  // namespace vvmacd
