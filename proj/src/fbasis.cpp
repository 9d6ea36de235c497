#include "vvmacd/fbasis.hpp"

#include <algorithm>
#include <sstream>

namespace vvmacd {

namespace {

// tau = s_i(tau') for a strictly smaller tau'
bool s_i_lowers(const Psyt& tau, int i) {
  std::optional<Psyt> swapped = s_i(tau, i);
  return swapped && s_i_raises(*swapped, i);
}

int inv_stat(const std::vector<int>& a) {
  int cnt = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] < a[j]) ++cnt;
  return cnt;
}

// processing order: anything strictly above in the exponent order comes first
bool process_before(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> sa = a, sb = b;
  std::sort(sa.rbegin(), sa.rend());
  std::sort(sb.rbegin(), sb.rend());
  if (sa != sb) return sa > sb;
  int ia = inv_stat(a), ib = inv_stat(b);
  if (ia != ib) return ia < ib;
  return a < b;
}

// target = sum_k c_k cols[k] in Syt coordinates, solved exactly
std::vector<RatQT> solve_fiber(const std::vector<const SpechtVector*>& cols,
                               const SpechtVector& target) {
  std::map<Syt, int> row_index;
  for (const SpechtVector* col : cols)
    for (const auto& [tau, c] : col->terms()) row_index.emplace(tau, 0);
  for (const auto& [tau, c] : target.terms()) row_index.emplace(tau, 0);
  int m = 0;
  for (auto& [tau, idx] : row_index) idx = m++;
  int k = static_cast<int>(cols.size());
  std::vector<std::vector<RatQT>> mat(m, std::vector<RatQT>(k + 1, RatQT(0)));
  for (int col = 0; col < k; ++col)
    for (const auto& [tau, c] : cols[col]->terms())
      mat[row_index.at(tau)][col] = c;
  for (const auto& [tau, c] : target.terms())
    mat[row_index.at(tau)][k] = c;

  std::vector<int> pivot_of_col(k, -1);
  int next_row = 0;
  for (int col = 0; col < k && next_row < m; ++col) {
    int pr = -1;
    for (int r = next_row; r < m; ++r)
      if (!mat[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[pr], mat[next_row]);
    RatQT inv = mat[next_row][col].inv();
    for (int c = col; c <= k; ++c) mat[next_row][c] = mat[next_row][c] * inv;
    for (int r = 0; r < m; ++r) {
      if (r == next_row || mat[r][col].is_zero()) continue;
      RatQT f = mat[r][col];
      for (int c = col; c <= k; ++c)
        mat[r][c] = mat[r][c] - f * mat[next_row][c];
    }
    pivot_of_col[col] = next_row;
    ++next_row;
  }
  std::vector<RatQT> sol(k, RatQT(0));
  for (int col = 0; col < k; ++col)
    if (pivot_of_col[col] >= 0) sol[col] = mat[pivot_of_col[col]][k];
  // exactness check: inconsistent rows mean the fiber left the span
  for (int r = 0; r < m; ++r) {
    bool all_zero = true;
    for (int col = 0; col < k; ++col)
      if (!mat[r][col].is_zero()) all_zero = false;
    if (all_zero && !mat[r][k].is_zero())
      throw std::runtime_error("expand_in_F: fiber outside the cached span");
  }
  return sol;
}

}  // namespace

FBasisCache::FBasisCache(Shape shape, int power_bound, bool verify_weights)
    : shape_(std::move(shape)), bound_(power_bound), verify_(verify_weights) {
  if (power_bound < 0) throw tableau_error("negative power bound");
  for (const Ryt& T : enumerate_ryt(shape_, bound_))
    for (const Psyt& tau : enumerate_psyt(T)) build(tau);
}

FBasisCache::FBasisCache(Shape shape, const std::vector<Ryt>& targets,
                         bool verify_weights)
    : shape_(std::move(shape)), bound_(0), verify_(verify_weights) {
  for (const Ryt& T : targets) {
    if (T.shape() != shape_) throw tableau_error("target off the cache shape");
    bound_ = std::max(bound_, T.max_value());
    for (const Psyt& tau : enumerate_psyt(T)) build(tau);
  }
}

const VElement& FBasisCache::f(const Psyt& tau) const {
  auto it = table_.find(tau);
  if (it == table_.end()) throw tableau_error("filling not cached");
  return it->second;
}

const std::vector<std::pair<int, int>>& FBasisCache::weight(
    const Psyt& tau) const {
  auto it = weights_.find(tau);
  if (it == weights_.end()) throw tableau_error("filling not cached");
  return it->second;
}

const SpechtVector& FBasisCache::leading_fiber(const Psyt& tau) const {
  auto it = leading_.find(tau);
  if (it == leading_.end()) throw tableau_error("filling not cached");
  return it->second;
}

const std::vector<Psyt>& FBasisCache::taus_with_exponent(
    const std::vector<int>& w) const {
  static const std::vector<Psyt> empty;
  auto it = by_exponent_.find(w);
  return it != by_exponent_.end() ? it->second : empty;
}

const VElement& FBasisCache::build(const Psyt& tau) {
  auto hit = table_.find(tau);
  if (hit != table_.end()) return hit->second;

  int n = tau.n();
  VElement F;
  if (tau.is_syt()) {
    F = VElement::monomial(shape_, std::vector<int>(n, 0), tau.to_syt());
  } else {
    int lower_i = 0;
    for (int i = 1; i <= n - 1; ++i)
      if (s_i_lowers(tau, i)) {
        lower_i = i;
        break;
      }
    if (lower_i) {
      Psyt below = *s_i(tau, lower_i);
      VElement Fb = build(below);
      RatQT x = laurent_monomial(below.w(lower_i), below.c(lower_i));
      RatQT y = laurent_monomial(below.w(lower_i + 1), below.c(lower_i + 1));
      RatQT tm1 = laurent_monomial(0, 1) - RatQT(1);
      F = act_tTinv_on_V(lower_i, Fb) + Fb * (tm1 * y / (x - y));
    } else {
      Psyt prev = psi_inv(tau);
      VElement Fp = build(prev);
      std::vector<int> xn(n, 0);
      xn[n - 1] = 1;
      F = mul_X(xn, act_pi_inv(Fp)) * laurent_monomial(prev.w(1), 0);
    }
  }

  std::vector<std::pair<int, int>> wt;
  for (int i = 1; i <= n; ++i) wt.emplace_back(tau.w(i), tau.c(i));
  if (verify_) {
    for (int i = 1; i <= n; ++i)
      if (act_theta(i, F) != F * laurent_monomial(wt[i - 1].first, wt[i - 1].second))
        throw std::runtime_error("weight check failed on insert: " + tau.str());
  }
  std::vector<int> w = tau.w_vector();
  leading_.emplace(tau, F.fiber(w));
  by_exponent_[w].push_back(tau);
  weights_.emplace(tau, std::move(wt));
  return table_.emplace(tau, std::move(F)).first->second;
}

std::map<Psyt, RatQT> expand_in_F(const VElement& v, const FBasisCache& cache) {
  if (v.shape() != cache.shape())
    throw tableau_error("shape mismatch with cache");
  std::map<Psyt, RatQT> out;
  VElement residual = v;
  while (!residual.is_zero()) {
    const std::vector<int>* top = nullptr;
    for (const auto& [alpha, part] : residual.fibers())
      if (!top || process_before(alpha, *top)) top = &alpha;
    const std::vector<int> alpha = *top;
    const std::vector<Psyt>& group = cache.taus_with_exponent(alpha);
    if (group.empty())
      throw std::runtime_error("expand_in_F: exponent outside the cached span");
    std::vector<const SpechtVector*> cols;
    cols.reserve(group.size());
    for (const Psyt& tau : group) cols.push_back(&cache.leading_fiber(tau));
    std::vector<RatQT> sol = solve_fiber(cols, residual.fiber(alpha));
    for (size_t k = 0; k < group.size(); ++k) {
      if (sol[k].is_zero()) continue;
      out[group[k]] += sol[k];
      residual -= cache.f(group[k]) * sol[k];
    }
    if (residual.fibers().count(alpha))
      throw std::runtime_error("expand_in_F: fiber not eliminated");
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

VElement theta_power_sum(int ell, const VElement& v, const FBasisCache& cache) {
  if (ell == 0) throw tableau_error("power sum needs a nonzero exponent");
  if (ell > 0) {
    VElement total(v.shape());
    for (int i = 1; i <= v.n(); ++i) {
      VElement w = v;
      for (int k = 0; k < ell; ++k) w = act_theta(i, w);
      total += w;
    }
    return total;
  }
  std::map<Psyt, RatQT> coeffs = expand_in_F(v, cache);
  VElement total(v.shape());
  for (const auto& [tau, c] : coeffs) {
    RatQT scale(0);
    for (const auto& [dq, dt] : cache.weight(tau))
      scale += laurent_monomial(ell * dq, ell * dt);
    total += cache.f(tau) * (c * scale);
  }
  return total;
}

}  // namespace vvmacd
