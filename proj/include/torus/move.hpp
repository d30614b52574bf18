#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/dims.hpp"

namespace torus {

enum class Axis : std::uint8_t { Row, Col };

enum class Dir : std::uint8_t { Right, Left, Down, Up };

inline Axis axis_of(Dir d) {
  return (d == Dir::Right || d == Dir::Left) ? Axis::Row : Axis::Col;
}

inline Dir reversed(Dir d) {
  switch (d) {
    case Dir::Right: return Dir::Left;
    case Dir::Left: return Dir::Right;
    case Dir::Down: return Dir::Up;
    case Dir::Up: return Dir::Down;
  }
  throw std::logic_error("reversed: bad direction");
}

/// One rotatable line of the board.
struct Line {
  Axis axis = Axis::Row;
  int index = 0;  // 1-based row or column index

  friend bool operator==(const Line& a, const Line& b) {
    return a.axis == b.axis && a.index == b.index;
  }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }
};

/// A (possibly compound) rotation: `count` consecutive unit rotations of
/// one line in one direction. `count` contributes that many unit
/// rotations to the push number even when it exceeds the line length.
struct Move {
  Line line;
  Dir dir = Dir::Right;
  std::int64_t count = 1;

  static Move row(int i, Dir d, std::int64_t k = 1) {
    if (axis_of(d) != Axis::Row) throw std::domain_error("Move::row: direction not horizontal");
    return Move{Line{Axis::Row, i}, d, k};
  }
  static Move col(int j, Dir d, std::int64_t k = 1) {
    if (axis_of(d) != Axis::Col) throw std::domain_error("Move::col: direction not vertical");
    return Move{Line{Axis::Col, j}, d, k};
  }

  friend bool operator==(const Move& a, const Move& b) {
    return a.line == b.line && a.dir == b.dir && a.count == b.count;
  }
};

/// Throws unless the move's axis matches its direction, the index is in
/// range and count >= 1.
inline void validate_move(const Move& mv, const Dims& d) {
  if (axis_of(mv.dir) != mv.line.axis) throw std::domain_error("move: direction does not match line axis");
  if (mv.count < 1) throw std::domain_error("move: count must be >= 1");
  const int limit = mv.line.axis == Axis::Row ? d.m : d.n;
  if (mv.line.index < 1 || mv.line.index > limit) {
    throw std::domain_error("move: line index " + std::to_string(mv.line.index) + " out of range");
  }
}

inline int line_length(const Line& line, const Dims& d) {
  return line.axis == Axis::Row ? d.n : d.m;
}

/// Canonical form: count reduced modulo the line length. Identity moves
/// (count = 0 mod length) are rejected rather than silently dropped.
inline Move normalized(const Move& mv, const Dims& d) {
  validate_move(mv, d);
  const int len = line_length(mv.line, d);
  const std::int64_t c = mv.count % len;
  if (c == 0) throw std::domain_error("move: identity rotation (count multiple of line length)");
  Move out = mv;
  out.count = c;
  return out;
}

/// Ordered move sequence with push- and drag-number accounting.
///
/// push = total unit rotations; drag = number of maximal runs of moves
/// on the same line (direction-insensitive). Consecutive moves on the
/// same line and direction are stored collapsed; set keep_moves=false
/// to retain only the counters.
class MoveLog {
 public:
  explicit MoveLog(bool keep_moves = true) : keep_moves_(keep_moves) {}

  void append(const Move& mv) {
    if (mv.count < 1) throw std::domain_error("MoveLog::append: count must be >= 1");
    push_ += std::uint64_t(mv.count);
    if (mv.line.axis == Axis::Row) {
      row_push_ += std::uint64_t(mv.count);
    } else {
      col_push_ += std::uint64_t(mv.count);
    }
    if (!last_line_ || *last_line_ != mv.line) ++drag_;
    last_line_ = mv.line;
    if (keep_moves_) {
      if (!moves_.empty() && moves_.back().line == mv.line && moves_.back().dir == mv.dir) {
        moves_.back().count += mv.count;
      } else {
        moves_.push_back(mv);
      }
    }
  }

  void append_all(const std::vector<Move>& seq) {
    for (const auto& mv : seq) append(mv);
  }

  std::uint64_t push_count() const { return push_; }
  std::uint64_t drag_count() const { return drag_; }
  std::uint64_t row_push_count() const { return row_push_; }
  std::uint64_t col_push_count() const { return col_push_; }
  bool keeps_moves() const { return keep_moves_; }
  const std::vector<Move>& moves() const { return moves_; }

 private:
  bool keep_moves_;
  std::vector<Move> moves_;
  std::uint64_t push_ = 0;
  std::uint64_t row_push_ = 0;
  std::uint64_t col_push_ = 0;
  std::uint64_t drag_ = 0;
  std::optional<Line> last_line_;
};

/// Recompute push/drag of a move sequence from scratch (reference for
/// the incremental accounting).
struct PushDrag {
  std::uint64_t push = 0;
  std::uint64_t drag = 0;
};

inline PushDrag recount(const std::vector<Move>& moves) {
  PushDrag out;
  const Line* prev = nullptr;
  for (const auto& mv : moves) {
    out.push += std::uint64_t(mv.count);
    if (!prev || !(*prev == mv.line)) ++out.drag;
    prev = &mv.line;
  }
  return out;
}

}  // namespace torus
