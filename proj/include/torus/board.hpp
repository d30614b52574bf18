#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "torus/dims.hpp"
#include "torus/move.hpp"

namespace torus {

namespace detail {
inline std::int64_t pos_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

inline void check_cells_permutation(const Dims& d, const std::vector<Value>& cells) {
  if (std::int64_t(cells.size()) != d.cells()) {
    throw std::domain_error("board: cell count does not match dimensions");
  }
  std::vector<bool> seen(cells.size(), false);
  for (Value v : cells) {
    if (v < 1 || std::int64_t(v) > d.cells() || seen[v - 1]) {
      throw std::domain_error("board: cells are not a permutation of 1.." +
                              std::to_string(d.cells()));
    }
    seen[v - 1] = true;
  }
}
}  // namespace detail

/// Plain row-major board. Unit rotations cost O(line length).
class NaiveBoard {
 public:
  explicit NaiveBoard(const Dims& d) : dims_(d), cells_(d.cells()) {
    std::iota(cells_.begin(), cells_.end(), Value(1));
  }
  NaiveBoard(const Dims& d, std::vector<Value> cells) : dims_(d), cells_(std::move(cells)) {
    detail::check_cells_permutation(dims_, cells_);
  }

  const Dims& dims() const { return dims_; }
  int rows() const { return dims_.m; }
  int cols() const { return dims_.n; }

  Value at(int i, int j) const { return cells_[idx(i, j)]; }

  const std::vector<Value>& cells() const { return cells_; }
  std::vector<Value> to_cells() const { return cells_; }

  void assign_cells(const std::vector<Value>& cells) {
    detail::check_cells_permutation(dims_, cells);
    cells_ = cells;
  }

  void rotate_row_right(int i, std::int64_t k) {
    const int n = dims_.n;
    const int e = int(detail::pos_mod(k, n));
    if (e == 0) return;
    auto first = cells_.begin() + idx(i, 1);
    std::rotate(first, first + (n - e), first + n);
  }

  void rotate_col_down(int j, std::int64_t k) {
    const int m = dims_.m;
    const int e = int(detail::pos_mod(k, m));
    if (e == 0) return;
    scratch_.resize(m);
    for (int i = 1; i <= m; ++i) scratch_[i - 1] = at(i, j);
    for (int i = 1; i <= m; ++i) {
      cells_[idx(i, j)] = scratch_[detail::pos_mod(i - 1 - e, m)];
    }
  }

  void apply(const Move& mv) {
    validate_move(mv, dims_);
    switch (mv.dir) {
      case Dir::Right: rotate_row_right(mv.line.index, mv.count); break;
      case Dir::Left: rotate_row_right(mv.line.index, -mv.count); break;
      case Dir::Down: rotate_col_down(mv.line.index, mv.count); break;
      case Dir::Up: rotate_col_down(mv.line.index, -mv.count); break;
    }
  }

  friend bool operator==(const NaiveBoard& a, const NaiveBoard& b) {
    return a.dims_ == b.dims_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t idx(int i, int j) const { return std::size_t(i - 1) * dims_.n + (j - 1); }

  Dims dims_;
  std::vector<Value> cells_;
  std::vector<Value> scratch_;
};

/// Board with O(1) unit rotations of the first row and of any column.
///
/// The first row and each column body (rows 2..m) are circular buffers
/// with head offsets. A column rotation exchanges one value between the
/// row buffer and the column's body buffer; a first-row rotation only
/// adjusts the row offset. Rows other than the first rotate in O(n).
class FastBoard {
 public:
  explicit FastBoard(const Dims& d) : FastBoard(NaiveBoard(d)) {}

  explicit FastBoard(const NaiveBoard& b) : dims_(b.dims()) {
    const int m = dims_.m, n = dims_.n;
    row_.resize(n);
    body_.resize(std::size_t(n) * (m - 1));
    boff_.assign(n, 0);
    roff_ = 0;
    for (int j = 1; j <= n; ++j) {
      row_[j - 1] = b.at(1, j);
      for (int i = 2; i <= m; ++i) body_[body_index(j, i - 2)] = b.at(i, j);
    }
  }

  FastBoard(const Dims& d, const std::vector<Value>& cells) : FastBoard(NaiveBoard(d, cells)) {}

  const Dims& dims() const { return dims_; }
  int rows() const { return dims_.m; }
  int cols() const { return dims_.n; }

  Value at(int i, int j) const {
    if (i == 1) return row_[row_phys(j)];
    const int bl = dims_.m - 1;
    return body_[std::size_t(j - 1) * bl + (boff_[j - 1] + i - 2) % bl];
  }

  std::vector<Value> to_cells() const {
    std::vector<Value> out(dims_.cells());
    for (int i = 1; i <= dims_.m; ++i) {
      for (int j = 1; j <= dims_.n; ++j) out[std::size_t(i - 1) * dims_.n + (j - 1)] = at(i, j);
    }
    return out;
  }

  void assign_cells(const std::vector<Value>& cells) { *this = FastBoard(NaiveBoard(dims_, cells)); }

  NaiveBoard to_naive() const { return NaiveBoard(dims_, to_cells()); }

  void rotate_row_right(int i, std::int64_t k) {
    if (i == 1) {
      roff_ = int(detail::pos_mod(roff_ - k, dims_.n));
      return;
    }
    // Rows below the first are spread across the column bodies.
    const int n = dims_.n;
    const int e = int(detail::pos_mod(k, n));
    if (e == 0) return;
    scratch_.resize(n);
    for (int j = 1; j <= n; ++j) scratch_[j - 1] = at(i, j);
    const int bl = dims_.m - 1;
    for (int j = 1; j <= n; ++j) {
      body_[std::size_t(j - 1) * bl + (boff_[j - 1] + i - 2) % bl] =
          scratch_[detail::pos_mod(j - 1 - e, n)];
    }
  }

  void rotate_col_down_unit(int j) {
    const int bl = dims_.m - 1;
    const std::size_t base = std::size_t(j - 1) * bl;
    int& off = boff_[j - 1];
    off = (off + bl - 1) % bl;       // old tail slot becomes body position 2
    Value& slot2 = body_[base + off];
    Value& head = row_[row_phys(j)];
    std::swap(head, slot2);          // tail -> head, old head -> position 2
  }

  void rotate_col_up_unit(int j) {
    const int bl = dims_.m - 1;
    const std::size_t base = std::size_t(j - 1) * bl;
    int& off = boff_[j - 1];
    Value& slot2 = body_[base + off];
    Value& head = row_[row_phys(j)];
    std::swap(head, slot2);          // position 2 -> head, old head parked
    off = (off + 1) % bl;            // parked value becomes the new tail
  }

  void rotate_col_down(int j, std::int64_t k) {
    const int m = dims_.m;
    const int e = int(detail::pos_mod(k, m));
    if (e == 0) return;
    if (e <= m - e) {
      for (int t = 0; t < e; ++t) rotate_col_down_unit(j);
    } else {
      for (int t = 0; t < m - e; ++t) rotate_col_up_unit(j);
    }
  }

  void apply(const Move& mv) {
    validate_move(mv, dims_);
    switch (mv.dir) {
      case Dir::Right: rotate_row_right(mv.line.index, mv.count); break;
      case Dir::Left: rotate_row_right(mv.line.index, -mv.count); break;
      case Dir::Down: rotate_col_down(mv.line.index, mv.count); break;
      case Dir::Up: rotate_col_down(mv.line.index, -mv.count); break;
    }
  }

 private:
  int row_phys(int j) const { return int((roff_ + j - 1) % dims_.n); }
  std::size_t body_index(int j, int k) const {
    return std::size_t(j - 1) * (dims_.m - 1) + std::size_t((boff_[j - 1] + k) % (dims_.m - 1));
  }

  Dims dims_;
  std::vector<Value> row_;
  std::vector<Value> body_;
  std::vector<int> boff_;
  int roff_ = 0;
  std::vector<Value> scratch_;
};

template <class Board>
void replay(Board& board, std::span<const Move> moves) {
  for (const auto& mv : moves) board.apply(mv);
}

template <class Board>
void apply_logged(Board& board, MoveLog& log, const Move& mv) {
  board.apply(mv);
  log.append(mv);
}

/// true iff cell (i,j) holds (i-1)n + j everywhere.
template <class Board>
bool is_sorted(const Board& board) {
  const Dims d = board.dims();
  for (int i = 1; i <= d.m; ++i) {
    for (int j = 1; j <= d.n; ++j) {
      if (board.at(i, j) != sorted_value(d, i, j)) return false;
    }
  }
  return true;
}

struct ColumnPredicates {
  bool near_full = false;
  bool body_full = false;
  bool body_sorted = false;
};

/// Structural predicates of column j: near-full (body elements target
/// this column), body-full (body holds exactly the row-2..m targets),
/// body-sorted (body elements in their exact target cells).
template <class Board>
ColumnPredicates column_predicates(const Board& board, int j) {
  const Dims d = board.dims();
  if (j < 1 || j > d.n) throw std::domain_error("column_predicates: column index out of range");
  ColumnPredicates out;
  out.near_full = true;
  bool rows_below_one = true;
  bool exact = true;
  for (int i = 2; i <= d.m; ++i) {
    const Value v = board.at(i, j);
    if (target_col(v, d) != j) out.near_full = false;
    if (target_row(v, d) < 2) rows_below_one = false;
    if (v != sorted_value(d, i, j)) exact = false;
  }
  out.body_full = out.near_full && rows_below_one;
  out.body_sorted = out.body_full && exact;
  return out;
}

/// Parity of the permutation whose one-line form is the row-major
/// reading of the board. Computed by cycle counting, never cached.
template <class Board>
Parity board_parity(const Board& board) {
  const Dims d = board.dims();
  const std::int64_t len = d.cells();
  std::vector<bool> seen(len, false);
  std::int64_t cycles = 0;
  for (std::int64_t s = 0; s < len; ++s) {
    if (seen[s]) continue;
    ++cycles;
    std::int64_t cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      const Value v = board.at(int(cur / d.n) + 1, int(cur % d.n) + 1);
      cur = std::int64_t(v) - 1;
    }
  }
  return ((len - cycles) % 2 == 0) ? Parity::Even : Parity::Odd;
}

/// Sortability characterization: some dimension even, or the induced
/// permutation even.
template <class Board>
bool is_sortable(const Board& board) {
  const Dims d = board.dims();
  if (d.m % 2 == 0 || d.n % 2 == 0) return true;
  return board_parity(board) == Parity::Even;
}

}  // namespace torus
