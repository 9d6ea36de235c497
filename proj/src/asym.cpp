#include "vvmacd/asym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vvmacd {

AsymLabelling::AsymLabelling(Partition base, std::vector<int> row1,
                             std::vector<std::vector<int>> lower)
    : base_(std::move(base)), row1_(std::move(row1)), lower_(std::move(lower)) {
  while (!row1_.empty() && row1_.back() == 0) row1_.pop_back();
  for (size_t i = 0; i < row1_.size(); ++i) {
    if (row1_[i] <= 0) throw tableau_error("row values must be positive on the support");
    if (i > 0 && row1_[i] > row1_[i - 1])
      throw tableau_error("top row must decrease weakly");
  }
  if (static_cast<int>(lower_.size()) != base_.length())
    throw tableau_error("lower filling must cover the base shape");
  for (int r = 1; r <= base_.length(); ++r) {
    if (static_cast<int>(lower_[r - 1].size()) != base_.part(r))
      throw tableau_error("lower row length mismatch");
    for (int c = 1; c <= base_.part(r); ++c) {
      int v = lower_[r - 1][c - 1];
      if (v < 0) throw tableau_error("values must be nonnegative");
      if (c > 1 && v > lower_[r - 1][c - 2])
        throw tableau_error("rows must decrease weakly");
      int above = r == 1 ? (c <= static_cast<int>(row1_.size()) ? row1_[c - 1] : 0)
                         : lower_[r - 2][c - 1];
      if (v >= above) throw tableau_error("columns must decrease strictly");
    }
  }
}

AsymLabelling AsymLabelling::from_finite(const Partition& base, const Ryt& finite) {
  const Shape expect = PaddedShape(base, finite.n()).shape();
  if (finite.shape() != expect)
    throw tableau_error("filling is not on a padded diagram of the base");
  std::vector<int> row1 = finite.rows().empty() ? std::vector<int>{} : finite.rows()[0];
  std::vector<std::vector<int>> lower(finite.rows().begin() + (finite.rows().empty() ? 0 : 1),
                                      finite.rows().end());
  return AsymLabelling(base, std::move(row1), std::move(lower));
}

bool AsymLabelling::in_diagram(Box b) const {
  if (b.row < 1 || b.col < 1) return false;
  if (b.row == 1) return true;
  return b.col <= base_.part(b.row - 1);
}

int AsymLabelling::value(Box b) const {
  if (!in_diagram(b)) throw tableau_error("box outside the infinite diagram");
  if (b.row == 1)
    return b.col <= static_cast<int>(row1_.size()) ? row1_[b.col - 1] : 0;
  return lower_[b.row - 2][b.col - 1];
}

int AsymLabelling::deg() const {
  int d = std::accumulate(row1_.begin(), row1_.end(), 0);
  for (const auto& row : lower_) d = std::accumulate(row.begin(), row.end(), d);
  return d;
}

int AsymLabelling::rank() const {
  return std::max(base_.min_rank(),
                  base_.size() + static_cast<int>(row1_.size()));
}

Ryt AsymLabelling::restrict(int n) const {
  if (n < rank()) throw tableau_error("restriction below rank");
  std::vector<std::vector<int>> vals;
  if (n - base_.size() > 0) {
    std::vector<int> top = row1_;
    top.resize(n - base_.size(), 0);
    vals.push_back(std::move(top));
  }
  for (const auto& row : lower_) vals.push_back(row);
  return Ryt(PaddedShape(base_, n).shape(), std::move(vals));
}

bool operator<(const AsymLabelling& a, const AsymLabelling& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  if (a.row1_ != b.row1_) return a.row1_ < b.row1_;
  return a.lower_ < b.lower_;
}

std::string AsymLabelling::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < row1_.size(); ++i) os << (i ? " " : "") << row1_[i];
  os << " ...]";
  for (const auto& row : lower_) {
    os << " / ";
    for (size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
  }
  return os.str();
}

AsymLabelling t_min(const Partition& base) {
  Partition conj = base.conjugate();
  std::vector<int> row1;
  for (int c = 1; c <= base.part(1); ++c) row1.push_back(conj.part(c));
  std::vector<std::vector<int>> lower(base.length());
  for (int r = 1; r <= base.length(); ++r)
    for (int c = 1; c <= base.part(r); ++c)
      lower[r - 1].push_back(conj.part(c) - r);
  return AsymLabelling(base, std::move(row1), std::move(lower));
}

namespace {

std::optional<AsymLabelling> bump(const AsymLabelling& T, Box b, int delta) {
  std::vector<int> row1 = T.row1();
  std::vector<std::vector<int>> lower = T.lower();
  if (b.row == 1) {
    if (b.col > static_cast<int>(row1.size())) row1.resize(b.col, 0);
    row1[b.col - 1] += delta;
  } else {
    lower[b.row - 2][b.col - 1] += delta;
  }
  try {
    return AsymLabelling(T.base(), std::move(row1), std::move(lower));
  } catch (const tableau_error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::pair<Box, AsymLabelling>> raising_pairs(const AsymLabelling& T) {
  std::vector<std::pair<Box, AsymLabelling>> out;
  // any raisable box lies within the one-larger padded diagram
  for (Box b : PaddedShape(T.base(), T.rank() + 1).shape().boxes_row_major())
    if (auto up = bump(T, b, +1)) out.emplace_back(b, std::move(*up));
  return out;
}

std::vector<std::pair<Box, AsymLabelling>> lowering_pairs(const AsymLabelling& T) {
  std::vector<std::pair<Box, AsymLabelling>> out;
  for (Box b : PaddedShape(T.base(), T.rank()).shape().boxes_row_major())
    if (T.value(b) >= 1)
      if (auto down = bump(T, b, -1)) out.emplace_back(b, std::move(*down));
  return out;
}

std::vector<AsymLabelling> enumerate_omega(const Partition& base, int max_degree) {
  std::vector<AsymLabelling> out;
  const int lam1 = base.part(1);
  for (const Ryt& low : enumerate_rssyt(Shape::of(base), max_degree)) {
    // minimal admissible top-row value over each base column
    std::vector<int> floor_(lam1, 0);
    for (int c = 1; c <= lam1; ++c) floor_[c - 1] = low.value(Box{1, c}) + 1;
    int need_all = std::accumulate(floor_.begin(), floor_.end(), 0);
    if (low.deg() + need_all > max_degree) continue;
    std::vector<int> row1;
    auto rec = [&](auto&& self, int col, int prev, int used) -> void {
      if (col > lam1) {
        out.emplace_back(base, row1, low.rows());
        int budget = max_degree - low.deg() - used;
        for (int v = std::min(prev, budget); v >= 1; --v) {
          row1.push_back(v);
          self(self, col + 1, v, used + v);
          row1.pop_back();
        }
        return;
      }
      int need_rest = 0;
      for (int c = col + 1; c <= lam1; ++c) need_rest += floor_[c - 1];
      int hi = std::min(prev, max_degree - low.deg() - used - need_rest);
      for (int v = hi; v >= floor_[col - 1]; --v) {
        row1.push_back(v);
        self(self, col + 1, v, used + v);
        row1.pop_back();
      }
    };
    rec(rec, 1, max_degree + 1, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Apsyt::Apsyt(Partition base, int rank, Psyt finite)
    : base_(std::move(base)), rank_(rank), finite_(std::move(finite)) {
  if (rank_ < base_.min_rank()) throw tableau_error("rank below minimum");
  if (finite_.shape() != PaddedShape(base_, rank_).shape())
    throw tableau_error("finite part is not on the padded diagram of the rank");
  // trim the canonical consecutive power-zero tail
  while (rank_ > base_.min_rank()) {
    Box last{1, rank_ - base_.size()};
    Psyt::Cell cl = finite_.cell(last);
    if (cl.label != rank_ || cl.power != 0) break;
    std::vector<std::vector<Psyt::Cell>> cells = finite_.rows();
    cells[0].pop_back();
    if (cells[0].empty()) cells.erase(cells.begin());
    --rank_;
    finite_ = Psyt(PaddedShape(base_, rank_).shape(), std::move(cells));
  }
}

Psyt Apsyt::restrict(int k) const {
  if (k < rank_) throw tableau_error("restriction below rank");
  if (k == rank_) return finite_;
  std::vector<std::vector<Psyt::Cell>> cells = finite_.rows();
  if (cells.empty()) cells.emplace_back();
  for (int lbl = rank_ + 1; lbl <= k; ++lbl) cells[0].push_back(Psyt::Cell{lbl, 0});
  return Psyt(PaddedShape(base_, k).shape(), std::move(cells));
}

AsymLabelling Apsyt::p_of() const {
  return AsymLabelling::from_finite(base_, finite_.p_of());
}

bool operator<(const Apsyt& a, const Apsyt& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  return a.finite_ < b.finite_;
}

std::string Apsyt::str() const {
  std::ostringstream os;
  os << finite_.str() << " | rank " << rank_;
  return os.str();
}

std::vector<std::pair<Box, Box>> inversions(const Apsyt& tau) {
  return inversions(tau.finite());
}

int inv_count(const Apsyt& tau) { return inv_count(tau.finite()); }

std::vector<Apsyt> enumerate_apsyt(const AsymLabelling& T, int rank_bound) {
  if (rank_bound < T.rank()) throw tableau_error("rank bound below the labelling rank");
  std::vector<Apsyt> out;
  for (const Psyt& tau : enumerate_psyt(T.restrict(rank_bound)))
    out.emplace_back(T.base(), rank_bound, tau);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vvmacd
