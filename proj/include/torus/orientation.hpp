#pragma once

#include <stdexcept>
#include <vector>

#include "torus/board.hpp"
#include "torus/dims.hpp"
#include "torus/move.hpp"

namespace torus {

/// Frame change composed of an optional transpose and mirrors along
/// either axis. Used to bring a board into the canonical frame (m <= n,
/// first row rotates rightward, columns rotate downward).
struct Orientation {
  bool transposed = false;
  bool row_mirrored = false;  // left-right flip (column order reversed)
  bool col_mirrored = false;  // top-bottom flip (row order reversed)

  bool is_identity() const { return !transposed && !row_mirrored && !col_mirrored; }
};

/// Bijective translation between a reoriented view and the original
/// board: positions, values (relabeled so that sorting the view sorts
/// the original), and moves.
class FrameMap {
 public:
  FrameMap(const Dims& original, const Orientation& o)
      : orig_(original), o_(o), view_(o.transposed ? original.transposed() : original) {}

  const Dims& original_dims() const { return orig_; }
  const Dims& view_dims() const { return view_; }
  const Orientation& orientation() const { return o_; }

  Position to_original(Position p) const {
    int i = o_.col_mirrored ? view_.m + 1 - p.row : p.row;
    int j = o_.row_mirrored ? view_.n + 1 - p.col : p.col;
    return o_.transposed ? Position{j, i} : Position{i, j};
  }

  Position to_view(Position p) const {
    int i = p.row, j = p.col;
    if (o_.transposed) std::swap(i, j);
    if (o_.col_mirrored) i = view_.m + 1 - i;
    if (o_.row_mirrored) j = view_.n + 1 - j;
    return Position{i, j};
  }

  /// Value carried by `x` in the view: the one whose view target is the
  /// image of x's original target.
  Value view_value(Value x) const {
    const Position t = to_view(target_position(x, orig_));
    return sorted_value(view_, t.row, t.col);
  }

  Value original_value(Value x) const {
    const Position t = to_original(target_position(x, view_));
    return sorted_value(orig_, t.row, t.col);
  }

  /// Translate a move stated in view coordinates back to the original
  /// frame; replaying translated moves on the original board tracks the
  /// view exactly.
  Move to_original(const Move& mv) const {
    validate_move(mv, view_);
    int index = mv.line.index;
    Dir dir = mv.dir;
    if (mv.line.axis == Axis::Row) {
      if (o_.col_mirrored) index = view_.m + 1 - index;
      if (o_.row_mirrored) dir = reversed(dir);
      if (o_.transposed) {
        return Move::col(index, dir == Dir::Right ? Dir::Down : Dir::Up, mv.count);
      }
      return Move::row(index, dir, mv.count);
    }
    if (o_.row_mirrored) index = view_.n + 1 - index;
    if (o_.col_mirrored) dir = reversed(dir);
    if (o_.transposed) {
      return Move::row(index, dir == Dir::Down ? Dir::Right : Dir::Left, mv.count);
    }
    return Move::col(index, dir, mv.count);
  }

  std::vector<Move> to_original(const std::vector<Move>& moves) const {
    std::vector<Move> out;
    out.reserve(moves.size());
    for (const auto& mv : moves) out.push_back(to_original(mv));
    return out;
  }

 private:
  Dims orig_;
  Orientation o_;
  Dims view_;
};

struct ReorientedBoard {
  NaiveBoard board;
  FrameMap map;
};

/// Build the reoriented view of a board. The view's cells are relabeled
/// so that the view is sorted exactly when the original is.
inline ReorientedBoard reorient(const NaiveBoard& board, const Orientation& o) {
  FrameMap map(board.dims(), o);
  const Dims vd = map.view_dims();
  std::vector<Value> cells(vd.cells());
  for (int i = 1; i <= vd.m; ++i) {
    for (int j = 1; j <= vd.n; ++j) {
      const Position p = map.to_original(Position{i, j});
      cells[std::size_t(i - 1) * vd.n + (j - 1)] = map.view_value(board.at(p.row, p.col));
    }
  }
  return ReorientedBoard{NaiveBoard(vd, std::move(cells)), map};
}

}  // namespace torus
