#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/board.hpp"
#include "torus/dims.hpp"
#include "torus/move.hpp"
#include "torus/rng.hpp"

namespace torus {

// ---------------------------------------------------------------------------
// Lehmer-code ranking of board states (row-major one-line form).

namespace detail {
inline std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= std::uint64_t(i);
  return f;
}
}  // namespace detail

/// Rank of the board's row-major reading among all permutations of
/// {1..mn}, in [0, (mn)!). Bijective for fixed dims.
template <class Board>
std::uint64_t state_rank(const Board& board) {
  const Dims d = board.dims();
  const int len = int(d.cells());
  if (len > 20) throw std::domain_error("state_rank: board too large to rank in 64 bits");
  std::array<Value, 20> seq{};
  for (int i = 0; i < len; ++i) seq[i] = board.at(i / d.n + 1, i % d.n + 1);
  std::uint64_t rank = 0;
  for (int i = 0; i < len; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < len; ++j) smaller += seq[j] < seq[i];
    rank += std::uint64_t(smaller) * detail::factorial(len - 1 - i);
  }
  return rank;
}

inline NaiveBoard state_unrank(const Dims& d, std::uint64_t rank) {
  const int len = int(d.cells());
  if (len > 20) throw std::domain_error("state_unrank: board too large");
  std::vector<Value> pool(len);
  for (int i = 0; i < len; ++i) pool[i] = Value(i + 1);
  std::vector<Value> cells(len);
  for (int i = 0; i < len; ++i) {
    const std::uint64_t f = detail::factorial(len - 1 - i);
    const auto idx = std::size_t(rank / f);
    rank %= f;
    if (idx >= pool.size()) throw std::domain_error("state_unrank: rank out of range");
    cells[i] = pool[idx];
    pool.erase(pool.begin() + std::ptrdiff_t(idx));
  }
  return NaiveBoard(d, std::move(cells));
}

// ---------------------------------------------------------------------------
// Exhaustive breadth-first search over the full move set.

struct ReachabilityReport {
  Dims dims{2, 2};
  std::uint64_t state_count = 0;  // (mn)!
  std::uint64_t reachable_count = 0;
  std::uint64_t even_count = 0;  // parity breakdown of the reachable set
  std::uint64_t odd_count = 0;
  std::vector<std::uint64_t> depth_histogram;  // index = distance from sorted

  int gods_number() const { return int(depth_histogram.size()) - 1; }
};

/// Exact BFS from the sorted state under all four unit-rotation
/// generator families (both directions of every row and column — the
/// original puzzle's move set, wider than what the solver emits).
/// Distances double as optimal push numbers since the generator set is
/// closed under inverses.
class BfsOracle {
 public:
  static constexpr std::uint64_t kDefaultCap = 400000;  // covers 3x3 comfortably

  BfsOracle(const Dims& d, std::uint64_t state_cap = kDefaultCap) : dims_(d) {
    const int len = int(d.cells());
    if (len > 20) throw std::domain_error("BfsOracle: board too large");
    total_ = detail::factorial(len);
    if (total_ > state_cap) {
      throw std::domain_error("BfsOracle: state space of " + std::to_string(total_) +
                              " exceeds cap " + std::to_string(state_cap) +
                              "; raise the cap to proceed");
    }
    depth_.assign(total_, kUnreached);

    std::vector<Move> gens;
    for (int i = 1; i <= d.m; ++i) {
      gens.push_back(Move::row(i, Dir::Right));
      gens.push_back(Move::row(i, Dir::Left));
    }
    for (int j = 1; j <= d.n; ++j) {
      gens.push_back(Move::col(j, Dir::Down));
      gens.push_back(Move::col(j, Dir::Up));
    }

    NaiveBoard scratch(d);
    std::vector<std::uint64_t> frontier{state_rank(scratch)};
    depth_[frontier[0]] = 0;
    std::uint8_t level = 0;
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t r : frontier) {
        const NaiveBoard base = state_unrank(d, r);
        for (const Move& g : gens) {
          scratch = base;
          scratch.apply(g);
          const std::uint64_t nr = state_rank(scratch);
          if (depth_[nr] == kUnreached) {
            depth_[nr] = std::uint8_t(level + 1);
            next.push_back(nr);
          }
        }
      }
      frontier = std::move(next);
      ++level;
      if (level == kUnreached) throw std::logic_error("BfsOracle: depth overflow");
    }
  }

  const Dims& dims() const { return dims_; }
  std::uint64_t state_count() const { return total_; }

  bool reached(std::uint64_t rank) const { return depth_.at(rank) != kUnreached; }

  std::optional<int> distance(std::uint64_t rank) const {
    const std::uint8_t v = depth_.at(rank);
    if (v == kUnreached) return std::nullopt;
    return int(v);
  }

  ReachabilityReport report() const {
    ReachabilityReport rep;
    rep.dims = dims_;
    rep.state_count = total_;
    for (std::uint64_t r = 0; r < total_; ++r) {
      if (depth_[r] == kUnreached) continue;
      ++rep.reachable_count;
      if (std::size_t(depth_[r]) + 1 > rep.depth_histogram.size()) {
        rep.depth_histogram.resize(depth_[r] + 1, 0);
      }
      ++rep.depth_histogram[depth_[r]];
      if (board_parity(state_unrank(dims_, r)) == Parity::Even) {
        ++rep.even_count;
      } else {
        ++rep.odd_count;
      }
    }
    return rep;
  }

 private:
  static constexpr std::uint8_t kUnreached = 0xFF;

  Dims dims_;
  std::uint64_t total_ = 0;
  std::vector<std::uint8_t> depth_;
};

/// Exact minimum number of unit rotations sorting the board, by BFS
/// distance. Throws on unsortable boards.
template <class Board>
int optimal_push_number(const BfsOracle& oracle, const Board& board) {
  if (board.dims() != oracle.dims()) throw std::domain_error("optimal_push_number: dims mismatch");
  const auto dist = oracle.distance(state_rank(board));
  if (!dist) throw std::domain_error("optimal_push_number: board is not sortable");
  return *dist;
}

// ---------------------------------------------------------------------------
// Seeded scrambles.

struct ScrambleSpec {
  Dims dims{2, 2};
  std::uint64_t seed = 0;
  std::int64_t steps = 0;  // number of random unit rotations from sorted
};

/// Deterministic random board: `steps` uniform random unit rotations
/// applied to the sorted configuration (SplitMix64 stream; generator
/// index = draw below 2(m+n): rows right/left then columns down/up).
/// Always sortable, rotations being invertible.
inline NaiveBoard random_sortable_scramble(const ScrambleSpec& spec) {
  if (spec.steps < 0) throw std::domain_error("scramble: steps must be >= 0");
  NaiveBoard board(spec.dims);
  SplitMix64 rng(spec.seed);
  const int m = spec.dims.m, n = spec.dims.n;
  for (std::int64_t s = 0; s < spec.steps; ++s) {
    const auto pick = std::uint64_t(rng.below(std::uint64_t(2 * (m + n))));
    if (pick < std::uint64_t(2 * m)) {
      board.rotate_row_right(int(pick / 2) + 1, pick % 2 == 0 ? 1 : -1);
    } else {
      const auto q = pick - std::uint64_t(2 * m);
      board.rotate_col_down(int(q / 2) + 1, q % 2 == 0 ? 1 : -1);
    }
  }
  return board;
}

// ---------------------------------------------------------------------------
// Independent replay verification.

enum class MovePolicy {
  Any,
  RowsRightColsDown,          // every row rightward, every column downward
  FirstRowRightColsDown,      // additionally, no row below the first
};

struct ReplayReport {
  bool final_sorted = false;
  std::uint64_t push = 0;
  std::uint64_t drag = 0;
  bool legal = true;
  std::int64_t first_violation = -1;  // move index, -1 if none
};

inline bool move_allowed(const Move& mv, MovePolicy policy) {
  switch (policy) {
    case MovePolicy::Any:
      return true;
    case MovePolicy::RowsRightColsDown:
      return mv.dir == Dir::Right || mv.dir == Dir::Down;
    case MovePolicy::FirstRowRightColsDown:
      if (mv.line.axis == Axis::Row) return mv.dir == Dir::Right && mv.line.index == 1;
      return mv.dir == Dir::Down;
  }
  return false;
}

/// Replay a move sequence on the naive engine and report push/drag,
/// sortedness and direction-policy legality. Illegal moves are flagged
/// but still applied, so the report reflects the full sequence.
inline ReplayReport replay_verify(NaiveBoard board, std::span<const Move> moves,
                                  MovePolicy policy = MovePolicy::Any) {
  ReplayReport rep;
  const Line* prev = nullptr;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& mv = moves[i];
    board.apply(mv);
    rep.push += std::uint64_t(mv.count);
    if (!prev || !(*prev == mv.line)) ++rep.drag;
    prev = &moves[i].line;
    if (rep.legal && !move_allowed(mv, policy)) {
      rep.legal = false;
      rep.first_violation = std::int64_t(i);
    }
  }
  rep.final_sorted = is_sorted(board);
  return rep;
}

}  // namespace torus
