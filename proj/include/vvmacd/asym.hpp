#pragma once

#include "vvmacd/tableaux.hpp"

namespace vvmacd {

// Finitely supported filling of the infinite padded diagram of a base shape:
// one infinite top row over the base partition's rows, weakly decreasing along
// rows, strictly decreasing down columns.
class AsymLabelling {
 public:
  // row1: values of the infinite row (implicit zeros beyond); lower: values on
  // the base partition's rows.
  AsymLabelling(Partition base, std::vector<int> row1,
                std::vector<std::vector<int>> lower);
  static AsymLabelling from_finite(const Partition& base, const Ryt& finite);

  const Partition& base() const { return base_; }
  const std::vector<int>& row1() const { return row1_; }
  const std::vector<std::vector<int>>& lower() const { return lower_; }
  bool in_diagram(Box b) const;
  int value(Box b) const;  // 0 beyond the stored support
  int deg() const;
  // Smallest n for which all nonzero values lie in the n-box padded diagram.
  int rank() const;
  Ryt restrict(int n) const;  // filling of the n-box padded diagram; n >= rank

  friend bool operator==(const AsymLabelling& a, const AsymLabelling& b) {
    return a.base_ == b.base_ && a.row1_ == b.row1_ && a.lower_ == b.lower_;
  }
  friend bool operator!=(const AsymLabelling& a, const AsymLabelling& b) {
    return !(a == b);
  }
  friend bool operator<(const AsymLabelling& a, const AsymLabelling& b);
  std::string str() const;

 private:
  Partition base_;
  std::vector<int> row1_;
  std::vector<std::vector<int>> lower_;
};

// The unique labelling of minimal degree: each box holds the number of boxes
// strictly below it in its column.
AsymLabelling t_min(const Partition& base);

// All labellings obtained by adding 1 to a single box, with the box raised.
std::vector<std::pair<Box, AsymLabelling>> raising_pairs(const AsymLabelling& T);
// All labellings obtained by subtracting 1 from a single box.
std::vector<std::pair<Box, AsymLabelling>> lowering_pairs(const AsymLabelling& T);

std::vector<AsymLabelling> enumerate_omega(const Partition& base, int max_degree);

// Periodic standard labelling of the infinite padded diagram whose tail is
// eventually the canonical consecutive power-zero filling; stored as its
// restriction at the minimal such rank.
class Apsyt {
 public:
  Apsyt(Partition base, int rank, Psyt finite);

  const Partition& base() const { return base_; }
  int rk() const { return rank_; }
  const Psyt& finite() const { return finite_; }
  Psyt restrict(int k) const;  // k >= rk(); extends by the canonical tail
  AsymLabelling p_of() const;

  friend bool operator==(const Apsyt& a, const Apsyt& b) {
    return a.base_ == b.base_ && a.rank_ == b.rank_ && a.finite_ == b.finite_;
  }
  friend bool operator!=(const Apsyt& a, const Apsyt& b) { return !(a == b); }
  friend bool operator<(const Apsyt& a, const Apsyt& b);
  std::string str() const;

 private:
  Partition base_;
  int rank_;
  Psyt finite_;
};

// All inversion pairs lie inside the minimal-rank restriction.
std::vector<std::pair<Box, Box>> inversions(const Apsyt& tau);
int inv_count(const Apsyt& tau);

// All tableaux over T with rank at most rank_bound, via restriction.
std::vector<Apsyt> enumerate_apsyt(const AsymLabelling& T, int rank_bound);

}  // namespace vvmacd
