#pragma once

#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "vvmacd/ratqt.hpp"
#include "vvmacd/tableaux.hpp"

namespace vvmacd {

// Vector in the seminormal module spanned by the standard tableaux of one
// shape, with coefficients in Q(q,t).
class SpechtVector {
public:
  SpechtVector() = default;
  explicit SpechtVector(Shape shape) : shape_(std::move(shape)) {}
  static SpechtVector unit(const Syt& tau);

  const Shape& shape() const { return shape_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Syt, RatQT>& terms() const { return terms_; }
  RatQT coeff(const Syt& tau) const;
  void add_term(const Syt& tau, const RatQT& c);  // accumulates, drops zeros

  SpechtVector& operator+=(const SpechtVector& o);
  SpechtVector& operator-=(const SpechtVector& o);
  SpechtVector& operator*=(const RatQT& c);
  friend SpechtVector operator+(SpechtVector a, const SpechtVector& b) { return a += b; }
  friend SpechtVector operator-(SpechtVector a, const SpechtVector& b) { return a -= b; }
  friend SpechtVector operator*(SpechtVector a, const RatQT& c) { return a *= c; }
  friend SpechtVector operator*(const RatQT& c, SpechtVector a) { return a *= c; }

  bool operator==(const SpechtVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const SpechtVector& o) const { return !(*this == o); }
  std::string str() const;

private:
  Shape shape_;
  std::map<Syt, RatQT> terms_;
};

// Generator action in the seminormal basis; 1 <= i <= n-1.
SpechtVector act_T(int i, const SpechtVector& v);
SpechtVector act_T_inv(int i, const SpechtVector& v);
// Jucys-Murphy element, diagonal with eigenvalue t^{content of label i's box}.
SpechtVector act_theta_bar(int i, const SpechtVector& v);
// Intertwiner t T_i^{-1} theta_i - theta_i t T_i^{-1}.
SpechtVector act_phi_bar(int i, const SpechtVector& v);

// Drop the largest label, which must sit at the end of the first row;
// tableaux with it elsewhere are sent to zero.
SpechtVector restrict_label(const SpechtVector& v);

// Trivial-character symmetrizer (1/[n]_t!) sum_w t^{binom(n,2)-l(w)} T_w,
// evaluated by walking the left weak order so each T_w(v) is one generator
// application away from a cached value.
template <class Vec, class Act>
Vec hecke_symmetrize(int n, const Vec& v, Act&& act) {
  std::vector<int> id(n);
  for (int k = 0; k < n; ++k) id[k] = k + 1;
  std::map<std::vector<int>, std::pair<int, Vec>> done;
  done.emplace(id, std::make_pair(0, v));
  std::queue<std::vector<int>> work;
  work.push(id);
  Vec total = v * laurent_monomial(0, n * (n - 1) / 2);
  while (!work.empty()) {
    std::vector<int> sigma = work.front();
    work.pop();
    const auto& [len, vec] = done.at(sigma);
    for (int i = 1; i < n; ++i) {
      int pi = 0, pj = 0;
      for (int k = 0; k < n; ++k) {
        if (sigma[k] == i) pi = k;
        if (sigma[k] == i + 1) pj = k;
      }
      if (pi > pj) continue;  // left factor s_i would shorten
      std::vector<int> next = sigma;
      std::swap(next[pi], next[pj]);
      if (done.count(next)) continue;
      Vec stepped = act(i, vec);
      total += stepped * laurent_monomial(0, n * (n - 1) / 2 - len - 1);
      auto [it, fresh] =
          done.emplace(std::move(next), std::make_pair(len + 1, std::move(stepped)));
      if (fresh) work.push(it->first);
    }
  }
  return total * t_factorial(n).inv();
}

SpechtVector symmetrize(const SpechtVector& v);

}  // namespace vvmacd
