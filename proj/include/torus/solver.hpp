#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torus/board.hpp"
#include "torus/dims.hpp"
#include "torus/event_wheel.hpp"
#include "torus/move.hpp"
#include "torus/orientation.hpp"
#include "torus/permutation.hpp"

namespace torus {

/// Thrown by solve() on inputs that fail the sortability test. Carries
/// the parity witness.
class Unsortable : public std::runtime_error {
 public:
  Unsortable(const Dims& d, Parity p)
      : std::runtime_error("unsortable: " + std::to_string(d.m) + "x" + std::to_string(d.n) +
                           " board with both dimensions odd and an odd permutation"),
        dims_(d),
        parity_(p) {}
  const Dims& dims() const { return dims_; }
  Parity parity() const { return parity_; }

 private:
  Dims dims_;
  Parity parity_;
};

enum class SolveMode { Standard, RestrictedRotationTypes };

/// Per-procedure rotation tallies in the frame the procedure ran in,
/// plus the procedure's own count laws evaluated on this call.
struct ProcStats {
  std::string name;
  std::uint64_t row_rotations = 0;      // unit rotations of R
  std::uint64_t col_rotations = 0;      // unit rotations of columns, total
  std::uint64_t max_col_rotations = 0;  // worst single column
  bool row_law_ok = true;
  bool col_law_ok = true;
  int calls = 1;

  void absorb(const ProcStats& other) {
    row_rotations += other.row_rotations;
    col_rotations += other.col_rotations;
    max_col_rotations = std::max(max_col_rotations, other.max_col_rotations);
    row_law_ok = row_law_ok && other.row_law_ok;
    col_law_ok = col_law_ok && other.col_law_ok;
    calls += other.calls;
  }
};

struct BoundCheck {
  std::string name;
  bool ok = false;
};

namespace detail {

inline int ceil_log2(std::int64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(std::uint64_t(x - 1));
}

inline int floor_log2(std::int64_t x) {
  return std::bit_width(std::uint64_t(x)) - 1;
}

inline int lsb_bit(std::int64_t value, int ell) { return int((value >> (ell - 1)) & 1); }

inline void note(std::vector<BoundCheck>* sink, const std::string& name, bool ok) {
  if (sink) sink->push_back(BoundCheck{name, ok});
}

/// Emission helper bound to one procedure call; keeps the unit-rotation
/// tallies the per-procedure count laws are stated in.
template <class Board>
struct Emitter {
  Board& board;
  MoveLog& log;
  ProcStats& stats;
  std::vector<std::uint64_t> per_col;

  Emitter(Board& b, MoveLog& l, ProcStats& s)
      : board(b), log(l), stats(s), per_col(std::size_t(b.dims().n) + 1, 0) {}

  void rotate_r(std::int64_t k = 1) {
    if (k == 0) return;
    apply_logged(board, log, Move::row(1, Dir::Right, k));
    stats.row_rotations += std::uint64_t(k);
  }

  void rotate_col_down(int j, std::int64_t k = 1) {
    if (k == 0) return;
    apply_logged(board, log, Move::col(j, Dir::Down, k));
    stats.col_rotations += std::uint64_t(k);
    per_col[std::size_t(j)] += std::uint64_t(k);
    stats.max_col_rotations = std::max(stats.max_col_rotations, per_col[std::size_t(j)]);
  }
};

}  // namespace detail

/// Number of body cells holding elements whose target column differs
/// from the column they sit in. Drives FillColumns' termination.
template <class Board>
std::int64_t potential(const Board& board) {
  const Dims d = board.dims();
  std::int64_t psi = 0;
  for (int j = 1; j <= d.n; ++j) {
    for (int i = 2; i <= d.m; ++i) {
      if (target_col(board.at(i, j), d) != j) ++psi;
    }
  }
  return psi;
}

/// Rotate columns and the first row until every column is near-full.
///
/// The first row works as a conveyor: whenever the element at R[j]
/// targets column j and that column still holds a stray body element,
/// the column is rotated to capture it. Event-wheel scheduling keeps
/// the running time proportional to the number of rotations performed.
template <class Board>
ProcStats fill_columns(Board& board, MoveLog& log, std::vector<BoundCheck>* sink = nullptr) {
  const Dims d = board.dims();
  const int m = d.m, n = d.n;
  if (m > n) throw std::domain_error("fill_columns: canonical frame requires m <= n");

  ProcStats stats;
  stats.name = "fill_columns";
  detail::Emitter<Board> emit(board, log, stats);

  std::vector<int> stray(n + 1, 0);  // body cells of C_j targeting elsewhere
  int underfull = 0;
  for (int j = 1; j <= n; ++j) {
    for (int i = 2; i <= m; ++i) {
      if (target_col(board.at(i, j), d) != j) ++stray[j];
    }
    if (stray[j] > 0) ++underfull;
  }

  EventWheel wheel(n + 1);
  for (int j = 1; j <= n; ++j) {
    const int c = target_col(board.at(1, j), d);
    wheel.schedule(c, (c - j + n) % n);
  }

  const std::uint64_t cap = 8ull * std::uint64_t(m) * std::uint64_t(n) *
                            std::uint64_t(2 + detail::ceil_log2(n));
  std::int64_t t = 0;
  while (underfull > 0) {
    for (int j : wheel.advance()) {
      if (stray[j] == 0) continue;  // became near-full; column is never rotated again
      while (stray[j] > 0 && target_col(board.at(1, j), d) == j) {
        const Value tail = board.at(m, j);
        emit.rotate_col_down(j, 1);
        if (target_col(tail, d) != j) {
          if (--stray[j] == 0) --underfull;
        }
      }
      const int c = target_col(board.at(1, j), d);
      if (c != j) wheel.schedule(c, t + (c - j + n) % n);
    }
    emit.rotate_r(1);
    ++t;
    if (stats.row_rotations > cap) {
      throw std::logic_error("fill_columns: rotation cap exceeded (internal error)");
    }
  }

  stats.row_law_ok =
      stats.row_rotations <= 4ull * std::uint64_t(m) * std::uint64_t(n) *
                                 std::uint64_t(1 + detail::floor_log2(n));
  stats.col_law_ok = stats.max_col_rotations <= std::uint64_t(m - 1);
  detail::note(sink, "fill_columns.rows<=4mn(1+floor_log2(n))", stats.row_law_ok);
  detail::note(sink, "fill_columns.per_column<=m-1", stats.col_law_ok);
  return stats;
}

/// Starting from near-full columns, rotate each column so its head
/// becomes its unique row-1 element, making every column body-full.
/// Performs exactly n rotations of R.
template <class Board>
ProcStats float_minimums(Board& board, MoveLog& log, std::vector<BoundCheck>* sink = nullptr) {
  const Dims d = board.dims();
  const int m = d.m, n = d.n;
  if (m > n) throw std::domain_error("float_minimums: canonical frame requires m <= n");
  for (int j = 1; j <= n; ++j) {
    if (!column_predicates(board, j).near_full) {
      throw std::logic_error("float_minimums: precondition violated, column not near-full");
    }
  }

  ProcStats stats;
  stats.name = "float_minimums";
  detail::Emitter<Board> emit(board, log, stats);

  EventWheel wheel(n + 1);
  for (int j = 1; j <= n; ++j) {
    const int c = target_col(board.at(1, j), d);
    wheel.schedule(c, (c - j + n) % n);
  }

  for (int t = 0; t < n; ++t) {
    for (int j : wheel.advance()) {
      int guard = 0;
      while (target_row(board.at(1, j), d) != 1) {
        emit.rotate_col_down(j, 1);
        if (++guard > m) throw std::logic_error("float_minimums: no row-1 element in column");
      }
    }
    emit.rotate_r(1);
  }

  stats.row_law_ok = stats.row_rotations == std::uint64_t(n);
  stats.col_law_ok = stats.max_col_rotations <= std::uint64_t(m - 1);
  detail::note(sink, "float_minimums.rows==n", stats.row_law_ok);
  detail::note(sink, "float_minimums.per_column<=m-1", stats.col_law_ok);
  return stats;
}

/// Body-sort the given body-full columns in parallel by simulating a
/// stable LSD radix sort on target rows.
///
/// Each of the ceil(log2(m-1)) bit phases unloads the bodies into
/// disjoint windows of R, then reloads them in two passes (set bit
/// first), costing exactly 3n rotations of R per phase and 2(m-1)
/// rotations per participating column.
template <class Board>
ProcStats radix_sort_bodies(Board& board, std::span<const int> columns, MoveLog& log,
                            std::vector<BoundCheck>* sink = nullptr) {
  const Dims d = board.dims();
  const int m = d.m, n = d.n;
  const int k = int(columns.size());
  if (m > n) throw std::domain_error("radix_sort_bodies: canonical frame requires m <= n");
  if (k > n / (m - 1)) {
    throw std::domain_error("radix_sort_bodies: too many columns for one batch");
  }
  {
    std::vector<bool> seen(n + 1, false);
    for (int j : columns) {
      if (j < 1 || j > n || seen[j]) {
        throw std::domain_error("radix_sort_bodies: bad or duplicate column index");
      }
      seen[j] = true;
    }
  }
  for (int j : columns) {
    if (!column_predicates(board, j).body_full) {
      throw std::logic_error("radix_sort_bodies: precondition violated, column not body-full");
    }
  }

  ProcStats stats;
  stats.name = "radix_sort_bodies";
  detail::Emitter<Board> emit(board, log, stats);

  const int phases = detail::ceil_log2(m - 1);  // zero when m == 2
  for (int ell = 1; ell <= phases; ++ell) {
    // Unload the k bodies into R. Column h unloads into the window
    // I_h = [(h-1)(m-1)+1 .. h(m-1)]: with rho(j, r) = ((j - r - 1) mod n) + 1
    // the element ejected at step r comes back past the head at the
    // same local step of the next sub-phase, which keeps phases stable.
    EventWheel unload(n + 1);
    for (int h = 0; h < k; ++h) {
      const int j0 = columns[std::size_t(h)] - 1;
      for (int w = h * (m - 1); w < (h + 1) * (m - 1); ++w) {
        unload.schedule(columns[std::size_t(h)], (j0 - w + n) % n);
      }
    }
    std::vector<std::vector<std::pair<std::int64_t, int>>> loads(2);
    for (int r = 0; r < n; ++r) {
      for (int j : unload.advance()) {
        const Value tail = board.at(m, j);
        emit.rotate_col_down(j, 1);
        loads[std::size_t(detail::lsb_bit(target_row(tail, d) - 2, ell))].push_back({r, j});
      }
      emit.rotate_r(1);
    }

    for (int bit = 1; bit >= 0; --bit) {
      EventWheel wheel(n + 1);
      for (const auto& [r, j] : loads[std::size_t(bit)]) wheel.schedule(j, r);
      for (int r = 0; r < n; ++r) {
        for (int j : wheel.advance()) {
          const Value head = board.at(1, j);
          if (target_col(head, d) != j || target_row(head, d) < 2 ||
              detail::lsb_bit(target_row(head, d) - 2, ell) != bit) {
            throw std::logic_error("radix_sort_bodies: load schedule out of sync");
          }
          emit.rotate_col_down(j, 1);
        }
        emit.rotate_r(1);
      }
    }
  }

  for (int j : columns) {
    if (!column_predicates(board, j).body_sorted) {
      throw std::logic_error("radix_sort_bodies: column not body-sorted on exit");
    }
  }
  stats.row_law_ok = stats.row_rotations == 3ull * std::uint64_t(n) * std::uint64_t(phases);
  stats.col_law_ok =
      stats.max_col_rotations <= 2ull * std::uint64_t(m - 1) * std::uint64_t(phases);
  detail::note(sink, "radix_sort_bodies.rows==3n*ceil(log2(m-1))", stats.row_law_ok);
  detail::note(sink, "radix_sort_bodies.per_column<=2(m-1)ceil(log2(m-1))", stats.col_law_ok);
  return stats;
}

/// Body-sort every column by batching radix_sort_bodies over groups of
/// floor(n/(m-1)) columns.
template <class Board>
ProcStats sort_all_bodies(Board& board, MoveLog& log, std::vector<BoundCheck>* sink = nullptr) {
  const Dims d = board.dims();
  ProcStats stats;
  stats.name = "sort_all_bodies";
  stats.calls = 0;
  if (d.m == 2) return stats;  // one-element bodies are sorted once body-full

  const int group = d.n / (d.m - 1);
  for (int start = 1; start <= d.n; start += group) {
    std::vector<int> cols;
    for (int j = start; j <= std::min(d.n, start + group - 1); ++j) cols.push_back(j);
    stats.absorb(radix_sort_bodies(board, cols, log, sink));
  }
  return stats;
}

/// Swap R[c_h] with R[c'_h] for every pair, at the cost of one circular
/// body shift of each auxiliary column in direction d.
///
/// Three passes of exactly n rotations of R each; auxiliary column h
/// captures the drifting pair elements when they pass over its head.
/// An upward body shift is simulated with m-1 downward rotations.
template <class Board>
ProcStats swap_pairs(Board& board, std::span<const std::pair<int, int>> pairs, Dir d,
                     std::span<const int> aux_columns, MoveLog& log,
                     std::vector<BoundCheck>* sink = nullptr) {
  const Dims dims = board.dims();
  const int m = dims.m, n = dims.n;
  const int k = int(pairs.size());
  if (d != Dir::Up && d != Dir::Down) throw std::domain_error("swap_pairs: d must be U or D");
  if (k > n) throw std::domain_error("swap_pairs: more pairs than columns");

  std::vector<int> aux(aux_columns.begin(), aux_columns.end());
  if (aux.empty()) {
    for (int h = 1; h <= k; ++h) aux.push_back(h);
  }
  if (int(aux.size()) != k) throw std::domain_error("swap_pairs: need one auxiliary column per pair");
  {
    std::vector<bool> seen(n + 1, false);
    for (const auto& [a, b] : pairs) {
      for (int c : {a, b}) {
        if (c < 1 || c > n || seen[c]) throw std::domain_error("swap_pairs: pair indices clash");
        seen[c] = true;
      }
    }
    std::vector<bool> seen_aux(n + 1, false);
    for (int a : aux) {
      if (a < 1 || a > n || seen_aux[a]) throw std::domain_error("swap_pairs: auxiliary columns clash");
      seen_aux[a] = true;
    }
  }

  ProcStats stats;
  stats.name = "swap_pairs";
  detail::Emitter<Board> emit(board, log, stats);

  // Column rotation amounts by phase: the capture direction alternates
  // D,U,D for d = Down and U,D,U for d = Up, where U costs m-1 unit
  // downward rotations.
  const std::int64_t one = 1, up = m - 1;
  for (int phase = 0; phase < 3; ++phase) {
    EventWheel wheel(n + 1);
    for (int h = 0; h < k; ++h) {
      const int target = (phase == 1) ? pairs[std::size_t(h)].second : pairs[std::size_t(h)].first;
      const int j0 = aux[std::size_t(h)] - 1;
      wheel.schedule(aux[std::size_t(h)], (j0 - (target - 1) + n) % n);
    }
    const bool capture_down = (phase == 1) ? (d == Dir::Up) : (d == Dir::Down);
    for (int r = 0; r < n; ++r) {
      for (int j : wheel.advance()) emit.rotate_col_down(j, capture_down ? one : up);
      emit.rotate_r(1);
    }
  }

  stats.row_law_ok = stats.row_rotations == 3ull * std::uint64_t(n);
  detail::note(sink, "swap_pairs.rows==3n", stats.row_law_ok);
  return stats;
}

enum class TargetLine { FirstRow, FirstColumnViaTranspose };

/// Permute the first row (or, via the transposed frame, the first
/// column) by an involution; auxiliary lines 1..a2(pi) get one body
/// shift in direction d.
template <class Board>
ProcStats apply_involution_to_line(Board& board, const Permutation& pi, Dir d, TargetLine line,
                                   MoveLog& log, std::vector<BoundCheck>* sink = nullptr) {
  const Dims dims = board.dims();
  if (!pi.is_involution()) throw std::domain_error("apply_involution_to_line: not an involution");
  const int expected = line == TargetLine::FirstRow ? dims.n : dims.m;
  if (pi.size() != expected) {
    throw std::domain_error("apply_involution_to_line: involution size does not match line");
  }

  std::vector<std::pair<int, int>> pairs;
  for (const auto& cyc : pi.cycles()) pairs.push_back({cyc[0], cyc[1]});

  if (line == TargetLine::FirstRow) {
    return swap_pairs(board, pairs, d, {}, log, sink);
  }

  // Work on the transposed frame and translate the moves back.
  auto view = reorient(NaiveBoard(dims, board.to_cells()), Orientation{.transposed = true});
  Board tboard(view.board.dims(), view.board.cells());
  MoveLog tlog(true);
  ProcStats stats = swap_pairs(tboard, pairs, d, {}, tlog, sink);
  stats.name = "apply_involution_to_line(transposed)";
  for (const auto& mv : tlog.moves()) log.append(view.map.to_original(mv));
  {
    const auto tcells = tboard.to_cells();
    std::vector<Value> cells(dims.cells());
    const Dims vd = view.map.view_dims();
    for (int i = 1; i <= vd.m; ++i) {
      for (int j = 1; j <= vd.n; ++j) {
        const Position p = view.map.to_original(Position{i, j});
        cells[std::size_t(p.row - 1) * dims.n + (p.col - 1)] =
            view.map.original_value(tcells[std::size_t(i - 1) * vd.n + (j - 1)]);
      }
    }
    board.assign_cells(cells);
  }
  return stats;
}

enum class EvenSide { N, M };

/// Exact rotation strings that swap R[1] and
/// R[n] using only R and C_1, leaving every other cell fixed. EvenSide
/// selects which dimension must be even for the construction to exist.
inline std::vector<Move> adjacent_swap_sequence(int m, int n, EvenSide side) {
  Dims d(m, n);
  std::vector<Move> seq;
  auto c1 = [&](std::int64_t k) { if (k > 0) seq.push_back(Move::col(1, Dir::Down, k)); };
  auto r = [&](std::int64_t k) { if (k > 0) seq.push_back(Move::row(1, Dir::Right, k)); };
  if (side == EvenSide::N) {
    if (n % 2 != 0) throw std::domain_error("adjacent_swap_sequence: n must be even");
    c1(1); r(2); c1(m - 1); r(1);
    for (int rep = 0; rep < n / 2 - 1; ++rep) { c1(1); r(1); c1(m - 1); r(1); }
  } else {
    if (m % 2 != 0) throw std::domain_error("adjacent_swap_sequence: m must be even");
    c1(m - 1); r(2); c1(2); r(n - 1); c1(1);
    for (int rep = 0; rep < m / 2 - 1; ++rep) { r(1); c1(1); r(n - 1); c1(1); }
    r(n - 1); c1(1);
  }
  return seq;
}

namespace detail {

template <class Board>
Permutation first_row_permutation(const Board& board) {
  const Dims d = board.dims();
  std::vector<int> img(d.n);
  for (int j = 1; j <= d.n; ++j) {
    const Value v = board.at(1, j);
    if (target_row(v, d) != 1) {
      throw std::logic_error("sort_first_row: first row holds a non-row-1 element");
    }
    img[std::size_t(j - 1)] = target_col(v, d);
  }
  return Permutation(std::move(img));
}

}  // namespace detail

/// Sort the first row of a board whose columns are all body-sorted,
/// completing the solve. Standard mode may rotate rows below the first
/// only inside the transposed fix-up of the odd-permutation case;
/// restricted mode replaces that fix-up with an extra pair swap plus an
/// adjacent-swap sequence, so it only ever rotates R and
/// columns.
template <class Board>
ProcStats sort_first_row(Board& board, MoveLog& log, SolveMode mode = SolveMode::Standard,
                         std::vector<BoundCheck>* sink = nullptr) {
  const Dims d = board.dims();
  const int m = d.m, n = d.n;
  for (int j = 1; j <= n; ++j) {
    if (!column_predicates(board, j).body_sorted) {
      throw std::logic_error("sort_first_row: precondition violated, column not body-sorted");
    }
  }
  if (!is_sortable(board)) throw std::logic_error("sort_first_row: board is not sortable");

  ProcStats stats;
  stats.name = "sort_first_row";
  detail::Emitter<Board> emit(board, log, stats);

  Permutation target = detail::first_row_permutation(board);
  if (n % 2 == 0 && parity(target) == Parity::Odd) {
    emit.rotate_r(1);  // an n-cycle is odd for even n, flipping the parity
    target = detail::first_row_permutation(board);
  }

  auto run = [&](ProcStats s) { stats.absorb(s); };

  if (parity(target) == Parity::Even) {
    InvolutionPair f = involution_factorization(target);
    run(apply_involution_to_line(board, f.sigma, Dir::Up, TargetLine::FirstRow, log, sink));
    run(apply_involution_to_line(board, f.upsilon, Dir::Down, TargetLine::FirstRow, log, sink));
  } else {
    if (m % 2 != 0) throw std::logic_error("sort_first_row: odd permutation with odd m");
    InvolutionPair f = involution_factorization(target);
    run(apply_involution_to_line(board, f.sigma, Dir::Up, TargetLine::FirstRow, log, sink));
    run(apply_involution_to_line(board, f.upsilon, Dir::Down, TargetLine::FirstRow, log, sink));
    const auto tau_cycle = f.tau->cycles().at(0);
    const std::vector<std::pair<int, int>> tau_pair{{tau_cycle[0], tau_cycle[1]}};
    const std::vector<int> first_col{1};

    if (mode == SolveMode::Standard) {
      run(swap_pairs(board, tau_pair, Dir::Up, first_col, log, sink));
      // Undo the circular shift of C_1's body on the transposed frame;
      // m even makes that shift an even permutation.
      Permutation pi1 = [&] {
        std::vector<int> img(m);
        for (int i = 1; i <= m; ++i) img[std::size_t(i - 1)] = target_row(board.at(i, 1), d);
        return Permutation(std::move(img));
      }();
      if (parity(pi1) != Parity::Even) {
        throw std::logic_error("sort_first_row: first-column shift has odd parity");
      }
      InvolutionPair f1 = involution_factorization(pi1);
      run(apply_involution_to_line(board, f1.sigma, Dir::Up, TargetLine::FirstColumnViaTranspose,
                                   log, sink));
      run(apply_involution_to_line(board, f1.upsilon, Dir::Down,
                                   TargetLine::FirstColumnViaTranspose, log, sink));
    } else {
      run(swap_pairs(board, tau_pair, Dir::Up, first_col, log, sink));
      const std::vector<std::pair<int, int>> outer{{1, n}};
      run(swap_pairs(board, outer, Dir::Down, first_col, log, sink));
      for (const Move& mv : adjacent_swap_sequence(m, n, EvenSide::M)) {
        if (mv.line.axis == Axis::Row) {
          emit.rotate_r(mv.count);
        } else {
          emit.rotate_col_down(mv.line.index, mv.count);
        }
      }
    }
  }

  if (!is_sorted(board)) throw std::logic_error("sort_first_row: board not sorted on exit");
  return stats;
}

struct SolveOptions {
  SolveMode mode = SolveMode::Standard;
  bool keep_moves = true;
};

struct PhaseStats {
  std::string name;
  std::uint64_t row_rotations = 0;
  std::uint64_t col_rotations = 0;
  int calls = 0;
};

/// Outcome of a solve: the move sequence in original coordinates plus
/// canonical-frame rotation tallies and the rotation-count law checks.
struct SolveReport {
  Dims dims{2, 2};
  SolveMode mode = SolveMode::Standard;
  bool transposed = false;
  MoveLog log;
  std::uint64_t push_count = 0;
  std::uint64_t drag_count = 0;
  std::vector<PhaseStats> phases;
  std::vector<BoundCheck> bound_checks;
  double bound_ratio = 0.0;  // push / (mn * log2(max(m,n)+1))

  /// Implementation constant for the O(mn log max(m,n)) rotation bound;
  /// every solve is checked against it.
  static constexpr double kPushConstant = 32.0;

  bool all_bounds_ok() const {
    for (const auto& c : bound_checks) {
      if (!c.ok) return false;
    }
    return true;
  }
};

/// Solve a sortable board in place. Throws Unsortable (with the parity
/// witness) otherwise. The returned report's move sequence replays to
/// the sorted configuration in original coordinates.
template <class Board>
SolveReport solve(Board& board, const SolveOptions& opts = {}) {
  const Dims d = board.dims();
  if (!is_sortable(board)) throw Unsortable(d, board_parity(board));

  SolveReport report;
  report.dims = d;
  report.mode = opts.mode;
  report.log = MoveLog(opts.keep_moves);
  const double denom = double(d.cells()) * std::log2(double(std::max(d.m, d.n)) + 1.0);

  if (is_sorted(board)) return report;  // degenerate pipeline

  report.transposed = d.m > d.n;
  std::optional<FrameMap> map;
  std::optional<Board> canonical;
  Board* work = &board;
  if (report.transposed) {
    auto view = reorient(NaiveBoard(d, board.to_cells()), Orientation{.transposed = true});
    map.emplace(view.map);
    canonical.emplace(view.board.dims(), view.board.cells());
    work = &*canonical;
  }

  MoveLog clog(opts.keep_moves);
  auto stage = [&](ProcStats s, auto&& check, const char* what) {
    report.phases.push_back(PhaseStats{s.name, s.row_rotations, s.col_rotations, s.calls});
    const Dims wd = work->dims();
    for (int j = 1; j <= wd.n; ++j) {
      if (!check(column_predicates(*work, j))) {
        throw std::logic_error(std::string("solve: staging invariant failed: ") + what);
      }
    }
  };

  stage(fill_columns(*work, clog, &report.bound_checks),
        [](const ColumnPredicates& p) { return p.near_full; }, "near-full after fill_columns");
  stage(float_minimums(*work, clog, &report.bound_checks),
        [](const ColumnPredicates& p) { return p.body_full; }, "body-full after float_minimums");
  stage(sort_all_bodies(*work, clog, &report.bound_checks),
        [](const ColumnPredicates& p) { return p.body_sorted; },
        "body-sorted after sort_all_bodies");
  {
    ProcStats s = sort_first_row(*work, clog, opts.mode, &report.bound_checks);
    report.phases.push_back(PhaseStats{s.name, s.row_rotations, s.col_rotations, s.calls});
  }
  if (!is_sorted(*work)) throw std::logic_error("solve: pipeline left board unsorted");

  if (report.transposed) {
    // Translate the canonical log and the solved cells back.
    if (opts.keep_moves) {
      for (const auto& mv : clog.moves()) report.log.append(map->to_original(mv));
    }
    std::vector<Value> cells(d.cells());
    const Dims vd = map->view_dims();
    for (int i = 1; i <= vd.m; ++i) {
      for (int j = 1; j <= vd.n; ++j) {
        const Position p = map->to_original(Position{i, j});
        cells[std::size_t(p.row - 1) * d.n + (p.col - 1)] =
            map->original_value(work->at(i, j));
      }
    }
    board.assign_cells(cells);
  } else {
    report.log = std::move(clog);
  }
  report.push_count = report.transposed ? clog.push_count() : report.log.push_count();
  report.drag_count = report.transposed ? clog.drag_count() : report.log.drag_count();

  report.bound_ratio = double(report.push_count) / denom;
  report.bound_checks.push_back(
      BoundCheck{"solve.push<=C*mn*log2(max+1)",
                 double(report.push_count) <= SolveReport::kPushConstant * denom});
  return report;
}

}  // namespace torus
