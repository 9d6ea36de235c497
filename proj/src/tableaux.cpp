#include "vvmacd/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace vvmacd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw tableau_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw tableau_error("partition parts must decrease weakly");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; c <= part(1); ++c) {
    int h = 0;
    while (h < length() && parts_[h] >= c) ++h;
    out.push_back(h);
  }
  return Partition(out);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw tableau_error("shape rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw tableau_error("shape rows must decrease weakly");
  }
}

int Shape::row_len(int r) const {
  return (r >= 1 && r <= rows()) ? rows_[r - 1] : 0;
}

int Shape::size() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

int Shape::col_height(int c) const {
  int h = 0;
  while (h < rows() && rows_[h] >= c) ++h;
  return h;
}

std::vector<Box> Shape::boxes_row_major() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= row_len(r); ++c) out.push_back(Box{r, c});
  return out;
}

std::vector<Box> Shape::boxes_column_standard() const {
  std::vector<Box> out;
  for (int c = 1; c <= row_len(1); ++c)
    for (int r = 1; r <= col_height(c); ++r) out.push_back(Box{r, c});
  return out;
}

std::string Shape::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ']';
  return os.str();
}

PaddedShape::PaddedShape(Partition b, int nn) : base(std::move(b)), n(nn) {
  if (n < base.min_rank())
    throw tableau_error("padded shape needs n >= |base| + base_1");
}

Shape PaddedShape::shape() const {
  std::vector<int> rows;
  rows.push_back(n - base.size());
  for (int p : base.parts()) rows.push_back(p);
  return Shape(rows);
}

Ryt::Ryt(Shape shape, std::vector<std::vector<int>> vals)
    : shape_(std::move(shape)), vals_(std::move(vals)) {
  if (static_cast<int>(vals_.size()) != shape_.rows())
    throw tableau_error("filling has wrong number of rows");
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (static_cast<int>(vals_[r - 1].size()) != shape_.row_len(r))
      throw tableau_error("filling row length mismatch");
    for (int c = 1; c <= shape_.row_len(r); ++c) {
      int v = vals_[r - 1][c - 1];
      if (v < 0) throw tableau_error("filling values must be nonnegative");
      if (c > 1 && v > vals_[r - 1][c - 2])
        throw tableau_error("filling must decrease weakly along rows");
      if (r > 1 && v > vals_[r - 2][c - 1])
        throw tableau_error("filling must decrease weakly down columns");
    }
  }
}

int Ryt::value(Box b) const {
  if (!shape_.contains(b)) throw tableau_error("box outside shape");
  return vals_[b.row - 1][b.col - 1];
}

int Ryt::deg() const {
  int d = 0;
  for (const auto& row : vals_) d = std::accumulate(row.begin(), row.end(), d);
  return d;
}

int Ryt::max_value() const {
  int m = 0;
  for (const auto& row : vals_)
    for (int v : row) m = std::max(m, v);
  return m;
}

bool Ryt::is_rssyt() const {
  for (int r = 2; r <= shape_.rows(); ++r)
    for (int c = 1; c <= shape_.row_len(r); ++c)
      if (vals_[r - 1][c - 1] >= vals_[r - 2][c - 1]) return false;
  return true;
}

std::string Ryt::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < vals_.size(); ++r) {
    if (r) os << " / ";
    for (size_t c = 0; c < vals_[r].size(); ++c) os << (c ? " " : "") << vals_[r][c];
  }
  return os.str();
}

Syt::Syt(Shape shape, std::vector<std::vector<int>> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != shape_.rows())
    throw tableau_error("labelling has wrong number of rows");
  box_of_.assign(shape_.size(), Box{});
  std::vector<bool> seen(shape_.size(), false);
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (static_cast<int>(labels_[r - 1].size()) != shape_.row_len(r))
      throw tableau_error("labelling row length mismatch");
    for (int c = 1; c <= shape_.row_len(r); ++c) {
      int v = labels_[r - 1][c - 1];
      if (v < 1 || v > shape_.size() || seen[v - 1])
        throw tableau_error("labels must use 1..n bijectively");
      seen[v - 1] = true;
      box_of_[v - 1] = Box{r, c};
      if (c > 1 && v <= labels_[r - 1][c - 2])
        throw tableau_error("labels must increase along rows");
      if (r > 1 && v <= labels_[r - 2][c - 1])
        throw tableau_error("labels must increase down columns");
    }
  }
}

Syt Syt::row_standard(const Shape& s) {
  std::vector<std::vector<int>> labels(s.rows());
  int next = 1;
  for (int r = 1; r <= s.rows(); ++r)
    for (int c = 1; c <= s.row_len(r); ++c) labels[r - 1].push_back(next++);
  return Syt(s, std::move(labels));
}

Syt Syt::column_standard(const Shape& s) {
  std::vector<std::vector<int>> labels(s.rows());
  for (int r = 1; r <= s.rows(); ++r) labels[r - 1].resize(s.row_len(r));
  int next = 1;
  for (Box b : s.boxes_column_standard()) labels[b.row - 1][b.col - 1] = next++;
  return Syt(s, std::move(labels));
}

int Syt::label(Box b) const {
  if (!shape_.contains(b)) throw tableau_error("box outside shape");
  return labels_[b.row - 1][b.col - 1];
}

Box Syt::box_of(int i) const {
  if (i < 1 || i > n()) throw tableau_error("label out of range");
  return box_of_[i - 1];
}

std::string Syt::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < labels_.size(); ++r) {
    if (r) os << " / ";
    for (size_t c = 0; c < labels_[r].size(); ++c) os << (c ? " " : "") << labels_[r][c];
  }
  return os.str();
}

Psyt::Psyt(Shape shape, std::vector<std::vector<Cell>> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != shape_.rows())
    throw tableau_error("labelling has wrong number of rows");
  box_of_.assign(shape_.size(), Box{});
  std::vector<bool> seen(shape_.size(), false);
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (static_cast<int>(cells_[r - 1].size()) != shape_.row_len(r))
      throw tableau_error("labelling row length mismatch");
    for (int c = 1; c <= shape_.row_len(r); ++c) {
      Cell cur = cells_[r - 1][c - 1];
      if (cur.label < 1 || cur.label > shape_.size() || seen[cur.label - 1])
        throw tableau_error("labels must use 1..n bijectively");
      if (cur.power < 0) throw tableau_error("powers must be nonnegative");
      seen[cur.label - 1] = true;
      box_of_[cur.label - 1] = Box{r, c};
      if (c > 1) {
        Cell left = cells_[r - 1][c - 2];
        if (!letter_less(left.label, left.power, cur.label, cur.power))
          throw tableau_error("letters must increase along rows");
      }
      if (r > 1) {
        Cell up = cells_[r - 2][c - 1];
        if (!letter_less(up.label, up.power, cur.label, cur.power))
          throw tableau_error("letters must increase down columns");
      }
    }
  }
}

Psyt Psyt::from_syt(const Syt& s) {
  std::vector<std::vector<Cell>> cells(s.shape().rows());
  for (int r = 1; r <= s.shape().rows(); ++r)
    for (int c = 1; c <= s.shape().row_len(r); ++c)
      cells[r - 1].push_back(Cell{s.label(Box{r, c}), 0});
  return Psyt(s.shape(), std::move(cells));
}

Psyt::Cell Psyt::cell(Box b) const {
  if (!shape_.contains(b)) throw tableau_error("box outside shape");
  return cells_[b.row - 1][b.col - 1];
}

Box Psyt::box_of(int i) const {
  if (i < 1 || i > n()) throw tableau_error("label out of range");
  return box_of_[i - 1];
}

std::vector<int> Psyt::w_vector() const {
  std::vector<int> out(n());
  for (int i = 1; i <= n(); ++i) out[i - 1] = w(i);
  return out;
}

int Psyt::weight() const {
  int s = 0;
  for (const auto& row : cells_)
    for (const Cell& cl : row) s += cl.power;
  return s;
}

Ryt Psyt::p_of() const {
  std::vector<std::vector<int>> vals(cells_.size());
  for (size_t r = 0; r < cells_.size(); ++r)
    for (const Cell& cl : cells_[r]) vals[r].push_back(cl.power);
  return Ryt(shape_, std::move(vals));
}

bool Psyt::is_syt() const {
  for (const auto& row : cells_)
    for (const Cell& cl : row)
      if (cl.power != 0) return false;
  return true;
}

Syt Psyt::to_syt() const {
  if (!is_syt()) throw tableau_error("nonzero powers present");
  std::vector<std::vector<int>> labels(cells_.size());
  for (size_t r = 0; r < cells_.size(); ++r)
    for (const Cell& cl : cells_[r]) labels[r].push_back(cl.label);
  return Syt(shape_, std::move(labels));
}

bool operator<(const Psyt& a, const Psyt& b) {
  if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
  return a.cells_ < b.cells_;
}

std::string Psyt::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < cells_.size(); ++r) {
    if (r) os << " / ";
    for (size_t c = 0; c < cells_[r].size(); ++c) {
      if (c) os << ' ';
      os << cells_[r][c].label << 'q' << cells_[r][c].power;
    }
  }
  return os.str();
}

namespace {

// Boxes sorted by (T value decreasing, column reading order): the box order
// underlying s_of, top_of and inversion counting.
std::vector<Box> boxes_by_value_desc(const Ryt& T) {
  std::vector<Box> boxes = T.shape().boxes_column_standard();
  std::stable_sort(boxes.begin(), boxes.end(), [&](Box a, Box b) {
    return T.value(a) > T.value(b);
  });
  return boxes;
}

// Boxes sorted by (T value increasing, row reading order): the minimal
// labelling's label order.
std::vector<Box> boxes_by_value_asc(const Ryt& T) {
  std::vector<Box> boxes = T.shape().boxes_row_major();
  std::stable_sort(boxes.begin(), boxes.end(), [&](Box a, Box b) {
    return T.value(a) < T.value(b);
  });
  return boxes;
}

Psyt label_along(const Ryt& T, const std::vector<Box>& order) {
  std::vector<std::vector<Psyt::Cell>> cells(T.shape().rows());
  for (int r = 1; r <= T.shape().rows(); ++r)
    cells[r - 1].resize(T.shape().row_len(r));
  int next = 1;
  for (Box b : order) cells[b.row - 1][b.col - 1] = Psyt::Cell{next++, T.value(b)};
  return Psyt(T.shape(), std::move(cells));
}

}  // namespace

Syt s_of(const Ryt& T) {
  std::vector<std::vector<int>> labels(T.shape().rows());
  for (int r = 1; r <= T.shape().rows(); ++r) labels[r - 1].resize(T.shape().row_len(r));
  int next = 1;
  for (Box b : boxes_by_value_desc(T)) labels[b.row - 1][b.col - 1] = next++;
  return Syt(T.shape(), std::move(labels));
}

std::vector<int> nu_of(const Ryt& T) {
  std::vector<int> vals;
  for (const auto& row : T.rows()) vals.insert(vals.end(), row.begin(), row.end());
  std::sort(vals.rbegin(), vals.rend());
  return vals;
}

long long b_stat(const Ryt& T) {
  std::vector<int> nu = nu_of(T);
  Syt s = s_of(T);
  long long b = 0;
  for (int i = 1; i <= T.n(); ++i)
    b += static_cast<long long>(nu[i - 1]) * (s.content_of(i) + i - 1);
  return b;
}

std::vector<int> mu_of(const Ryt& T) {
  std::vector<Box> order = boxes_by_value_asc(T);
  std::vector<int> parts;
  for (size_t i = 0; i < order.size(); ++i) {
    Box b = order[i];
    bool extends = i > 0 && order[i - 1].row == b.row &&
                   order[i - 1].col + 1 == b.col &&
                   T.value(order[i - 1]) == T.value(b);
    if (extends)
      ++parts.back();
    else
      parts.push_back(1);
  }
  return parts;
}

Psyt min_of(const Ryt& T) { return label_along(T, boxes_by_value_asc(T)); }

Psyt top_of(const Ryt& T) { return label_along(T, boxes_by_value_desc(T)); }

std::vector<std::pair<Box, Box>> inversions(const Psyt& tau) {
  std::vector<Box> order = boxes_by_value_desc(tau.p_of());
  std::vector<std::pair<Box, Box>> out;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j)
      if (tau.label(order[i]) > tau.label(order[j]))
        out.emplace_back(order[i], order[j]);
  return out;
}

int inv_count(const Psyt& tau) { return static_cast<int>(inversions(tau).size()); }

Psyt psi(const Psyt& tau) {
  int n = tau.n();
  std::vector<std::vector<Psyt::Cell>> cells = tau.rows();
  for (auto& row : cells)
    for (Psyt::Cell& cl : row) {
      if (cl.label >= 2)
        --cl.label;
      else {
        cl.label = n;
        ++cl.power;
      }
    }
  return Psyt(tau.shape(), std::move(cells));
}

Psyt psi_inv(const Psyt& tau) {
  int n = tau.n();
  std::vector<std::vector<Psyt::Cell>> cells = tau.rows();
  for (auto& row : cells)
    for (Psyt::Cell& cl : row) {
      if (cl.label < n)
        ++cl.label;
      else {
        if (cl.power < 1) throw tableau_error("not a rotation image");
        cl.label = 1;
        --cl.power;
      }
    }
  return Psyt(tau.shape(), std::move(cells));
}

std::optional<Psyt> s_i(const Psyt& tau, int i) {
  if (i < 1 || i >= tau.n()) throw tableau_error("swap index out of range");
  std::vector<std::vector<Psyt::Cell>> cells = tau.rows();
  Box b1 = tau.box_of(i), b2 = tau.box_of(i + 1);
  cells[b1.row - 1][b1.col - 1].label = i + 1;
  cells[b2.row - 1][b2.col - 1].label = i;
  try {
    return Psyt(tau.shape(), std::move(cells));
  } catch (const tableau_error&) {
    return std::nullopt;
  }
}

bool s_i_raises(const Psyt& tau, int i) {
  if (tau.w(i) < tau.w(i + 1)) return true;
  if (tau.w(i) == tau.w(i + 1) && tau.c(i) - tau.c(i + 1) > 1) return true;
  return false;
}

namespace {

std::vector<Psyt> up_neighbors(const Psyt& tau, int power_bound) {
  std::vector<Psyt> out;
  Psyt up = psi(tau);
  if (up.w(up.n()) <= power_bound) out.push_back(std::move(up));
  for (int i = 1; i < tau.n(); ++i)
    if (s_i_raises(tau, i))
      if (auto s = s_i(tau, i)) out.push_back(std::move(*s));
  return out;
}

}  // namespace

bool order_leq(const Psyt& a, const Psyt& b, int power_bound) {
  if (a.shape() != b.shape()) return false;
  std::set<Psyt> seen{a};
  std::queue<Psyt> work;
  work.push(a);
  while (!work.empty()) {
    Psyt cur = work.front();
    work.pop();
    if (cur == b) return true;
    if (cur.weight() > b.weight()) continue;
    for (Psyt& nb : up_neighbors(cur, power_bound))
      if (seen.insert(nb).second) work.push(std::move(nb));
  }
  return false;
}

std::vector<Psyt> enumerate_psyt(const Ryt& T) {
  Psyt start = min_of(T);
  std::set<Psyt> seen{start};
  std::queue<Psyt> work;
  work.push(start);
  while (!work.empty()) {
    Psyt cur = work.front();
    work.pop();
    for (int i = 1; i < cur.n(); ++i)
      if (auto nb = s_i(cur, i))
        if (seen.insert(*nb).second) work.push(std::move(*nb));
  }
  return std::vector<Psyt>(seen.begin(), seen.end());
}

std::vector<Syt> enumerate_syt(const Shape& s) {
  std::vector<Syt> out;
  int n = s.size();
  std::vector<std::vector<int>> labels(s.rows());
  for (int r = 1; r <= s.rows(); ++r) labels[r - 1].assign(s.row_len(r), 0);
  // place labels 1..n one at a time, always into a row whose left neighbor is
  // filled and whose upper neighbor is filled
  std::vector<int> filled(s.rows(), 0);  // boxes filled so far per row
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.emplace_back(s, labels);
      return;
    }
    for (int r = 1; r <= s.rows(); ++r) {
      int c = filled[r - 1] + 1;
      if (c > s.row_len(r)) continue;
      if (r > 1 && filled[r - 2] < c) continue;
      labels[r - 1][c - 1] = next;
      ++filled[r - 1];
      self(self, next + 1);
      --filled[r - 1];
      labels[r - 1][c - 1] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Ryt> enumerate_fillings(const Shape& s, int max_value, bool strict_cols) {
  std::vector<Ryt> out;
  std::vector<Box> order = s.boxes_row_major();
  std::vector<std::vector<int>> vals(s.rows());
  for (int r = 1; r <= s.rows(); ++r) vals[r - 1].assign(s.row_len(r), 0);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      out.emplace_back(s, vals);
      return;
    }
    Box b = order[idx];
    int hi = max_value;
    if (b.col > 1) hi = std::min(hi, vals[b.row - 1][b.col - 2]);
    if (b.row > 1) hi = std::min(hi, vals[b.row - 2][b.col - 1] - (strict_cols ? 1 : 0));
    for (int v = hi; v >= 0; --v) {
      vals[b.row - 1][b.col - 1] = v;
      self(self, idx + 1);
    }
    vals[b.row - 1][b.col - 1] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Ryt> enumerate_ryt(const Shape& s, int max_value) {
  return enumerate_fillings(s, max_value, false);
}

std::vector<Ryt> enumerate_rssyt(const Shape& s, int max_value) {
  return enumerate_fillings(s, max_value, true);
}

std::vector<Partition> enumerate_partitions(int max_size) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    out.emplace_back(parts);
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> bruhat_up_neighbors(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a[i] < a[j]) {
        std::vector<int> b = a;
        std::swap(b[i], b[j]);
        out.push_back(std::move(b));
      }
      if (a[i] >= 1 && a[i] <= a[j]) {
        std::vector<int> b = a;
        --b[i];
        ++b[j];
        out.push_back(std::move(b));
      }
      // affine swap-shift: (..a..b..) -> (..b-1..a+1..); needed so that
      // appending to the alcove walk (rotation by gamma-tilde) is monotone
      if (a[j] >= 1 && a[i] >= a[j]) {
        std::vector<int> b = a;
        b[i] = a[j] - 1;
        b[j] = a[i] + 1;
        out.push_back(std::move(b));
      }
    }
  return out;
}

bool bruhat_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0))
    return false;
  std::set<std::vector<int>> seen{a};
  std::queue<std::vector<int>> work;
  work.push(a);
  while (!work.empty()) {
    std::vector<int> cur = work.front();
    work.pop();
    if (cur == b) return true;
    for (auto& nb : bruhat_up_neighbors(cur))
      if (seen.insert(nb).second) work.push(std::move(nb));
  }
  return false;
}

std::vector<int> gamma_tilde_vec(const std::vector<int>& a) {
  if (a.empty()) throw tableau_error("empty vector");
  std::vector<int> out(a.begin() + 1, a.end());
  out.push_back(a.front() + 1);
  return out;
}

}  // namespace vvmacd
