#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vvmacd {

struct tableau_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cell of a Young diagram in English notation, 1-based.
struct Box {
  int row = 1;
  int col = 1;
  friend bool operator==(const Box& a, const Box& b) {
    return a.row == b.row && a.col == b.col;
  }
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
  friend bool operator<(const Box& a, const Box& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

inline int content(Box b) { return b.col - b.row; }

// Weakly decreasing positive parts; possibly empty.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                       // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                  // 1-based; 0 past the end
  // Smallest n for which the padded diagram (n-|lambda|, lambda) is defined.
  int min_rank() const { return size() + part(1); }
  Partition conjugate() const;
  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }
  std::string str() const;

 private:
  std::vector<int> parts_;
};

// Row lengths of a (possibly padded) diagram: weakly decreasing, no zero rows.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows);
  static Shape of(const Partition& p) { return Shape(p.parts()); }

  int rows() const { return static_cast<int>(rows_.size()); }
  int row_len(int r) const;               // 1-based; 0 past the end
  int size() const;                       // total boxes
  int col_height(int c) const;
  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= row_len(b.row); }
  std::vector<Box> boxes_row_major() const;       // (row, col) lexicographic
  std::vector<Box> boxes_column_standard() const; // (col, row) lexicographic

  friend bool operator==(const Shape& a, const Shape& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
  friend bool operator<(const Shape& a, const Shape& b) { return a.rows_ < b.rows_; }
  std::string str() const;

 private:
  std::vector<int> rows_;
};

// The diagram (n-|lambda|, lambda_1, ..., lambda_r): base shape with a long
// first row appended on top, defined for n >= |lambda| + lambda_1.
struct PaddedShape {
  Partition base;
  int n = 0;

  PaddedShape(Partition b, int nn);
  Shape shape() const;
  // The unique box of the (n+1)-padding not in the n-padding: (1, n-|lambda|+1).
  Box growth_box() const { return Box{1, n - base.size() + 1}; }
};

// Nonnegative filling weakly decreasing along rows and down columns.
class Ryt {
 public:
  Ryt(Shape shape, std::vector<std::vector<int>> vals);

  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return vals_; }
  int n() const { return shape_.size(); }
  int value(Box b) const;
  int deg() const;
  int max_value() const;
  bool is_rssyt() const;  // strictly decreasing down columns

  friend bool operator==(const Ryt& a, const Ryt& b) {
    return a.shape_ == b.shape_ && a.vals_ == b.vals_;
  }
  friend bool operator!=(const Ryt& a, const Ryt& b) { return !(a == b); }
  friend bool operator<(const Ryt& a, const Ryt& b) {
    return a.shape_ != b.shape_ ? a.shape_ < b.shape_ : a.vals_ < b.vals_;
  }
  std::string str() const;

 private:
  Shape shape_;
  std::vector<std::vector<int>> vals_;
};

// Bijective filling with 1..n, strictly increasing along rows and columns.
class Syt {
 public:
  Syt(Shape shape, std::vector<std::vector<int>> labels);
  static Syt row_standard(const Shape& s);
  static Syt column_standard(const Shape& s);

  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return labels_; }
  int n() const { return shape_.size(); }
  int label(Box b) const;
  Box box_of(int i) const;
  int content_of(int i) const { return content(box_of(i)); }

  friend bool operator==(const Syt& a, const Syt& b) {
    return a.shape_ == b.shape_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const Syt& a, const Syt& b) { return !(a == b); }
  friend bool operator<(const Syt& a, const Syt& b) {
    return a.shape_ != b.shape_ ? a.shape_ < b.shape_ : a.labels_ < b.labels_;
  }
  std::string str() const;

 private:
  Shape shape_;
  std::vector<std::vector<int>> labels_;
  std::vector<Box> box_of_;  // index i-1 -> box of label i
};

// Filling by formal letters "i q^b" (label i in 1..n used once, power b >= 0),
// strictly increasing along rows and columns under:
//   j q^m < k q^l  iff  m > l, or m = l and j < k.
class Psyt {
 public:
  struct Cell {
    int label = 0;
    int power = 0;
    friend bool operator==(const Cell& a, const Cell& b) {
      return a.label == b.label && a.power == b.power;
    }
    friend bool operator<(const Cell& a, const Cell& b) {
      return a.label != b.label ? a.label < b.label : a.power < b.power;
    }
  };

  Psyt(Shape shape, std::vector<std::vector<Cell>> cells);
  static Psyt from_syt(const Syt& s);

  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<Cell>>& rows() const { return cells_; }
  int n() const { return shape_.size(); }
  Cell cell(Box b) const;
  int label(Box b) const { return cell(b).label; }
  int power(Box b) const { return cell(b).power; }
  Box box_of(int i) const;
  int w(int i) const { return power(box_of(i)); }       // power of label i
  int c(int i) const { return content(box_of(i)); }     // content of label i's box
  std::vector<int> w_vector() const;
  int weight() const;                                   // sum of powers
  Ryt p_of() const;                                     // forget labels, keep powers
  bool is_syt() const;                                  // all powers zero
  Syt to_syt() const;

  friend bool operator==(const Psyt& a, const Psyt& b) {
    return a.shape_ == b.shape_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const Psyt& a, const Psyt& b) { return !(a == b); }
  friend bool operator<(const Psyt& a, const Psyt& b);
  std::string str() const;

 private:
  Shape shape_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<Box> box_of_;
};

// Letter comparison "j q^m < k q^l".
inline bool letter_less(int j, int m, int k, int l) {
  return m != l ? m > l : j < k;
}

// ---- statistics attached to a filling T ----

// Boxes ordered by (T value decreasing, then column reading order).
Syt s_of(const Ryt& T);
// Values of T sorted decreasingly.
std::vector<int> nu_of(const Ryt& T);
// b(T) = sum_i nu_i * (content of label-i box of s_of(T) + i - 1).
long long b_stat(const Ryt& T);
// Part sizes of the maximal one-row constant-value strips, listed in the
// minimal labelling's label order.
std::vector<int> mu_of(const Ryt& T);

// Extremes of the fiber of fillings projecting to T.
Psyt min_of(const Ryt& T);
Psyt top_of(const Ryt& T);

// Ordered pairs (b1, b2) with b1 earlier in s_of order but larger label.
std::vector<std::pair<Box, Box>> inversions(const Psyt& tau);
int inv_count(const Psyt& tau);

// Rotation: labels shift down by one; label 1 becomes n with power + 1.
Psyt psi(const Psyt& tau);
// Inverse rotation; requires label n to carry a positive power.
Psyt psi_inv(const Psyt& tau);
// Swap which boxes hold labels i and i+1 (powers stay with boxes), if valid.
std::optional<Psyt> s_i(const Psyt& tau, int i);
// Whether s_i(tau) exists and covers tau from above.
bool s_i_raises(const Psyt& tau, int i);
// Reachability of b from a going up through cover moves, with all
// intermediate powers bounded by power_bound.
bool order_leq(const Psyt& a, const Psyt& b, int power_bound);

// ---- enumeration ----

std::vector<Psyt> enumerate_psyt(const Ryt& T);
std::vector<Syt> enumerate_syt(const Shape& s);
std::vector<Ryt> enumerate_ryt(const Shape& s, int max_value);
std::vector<Ryt> enumerate_rssyt(const Shape& s, int max_value);
std::vector<Partition> enumerate_partitions(int max_size);

// ---- Bruhat order on nonnegative integer vectors ----
// Covers: swapping a smaller-earlier / larger-later pair goes up;
// moving a unit from a later strictly-larger entry to an earlier one goes down.

std::vector<std::vector<int>> bruhat_up_neighbors(const std::vector<int>& a);
bool bruhat_leq(const std::vector<int>& a, const std::vector<int>& b);
// (a_2, ..., a_n, a_1 + 1).
std::vector<int> gamma_tilde_vec(const std::vector<int>& a);

}  // namespace vvmacd
