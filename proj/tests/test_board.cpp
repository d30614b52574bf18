#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "torus/board.hpp"
#include "torus/rng.hpp"

using namespace torus;

namespace {

NaiveBoard make(const Dims& d, std::initializer_list<Value> cells) {
  return NaiveBoard(d, std::vector<Value>(cells));
}

NaiveBoard random_board(const Dims& d, SplitMix64& rng) {
  std::vector<Value> cells(d.cells());
  std::iota(cells.begin(), cells.end(), Value(1));
  for (std::size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[rng.below(i)]);
  }
  return NaiveBoard(d, std::move(cells));
}

Move random_move(const Dims& d, SplitMix64& rng) {
  const bool row = rng.below(2) == 0;
  if (row) {
    return Move::row(int(rng.below(std::uint64_t(d.m))) + 1,
                     rng.below(2) ? Dir::Right : Dir::Left, std::int64_t(rng.below(5)) + 1);
  }
  return Move::col(int(rng.below(std::uint64_t(d.n))) + 1, rng.below(2) ? Dir::Down : Dir::Up,
                   std::int64_t(rng.below(5)) + 1);
}

}  // namespace

TEST_CASE("target_position formulas") {
  const Dims d(3, 4);
  CHECK(target_position(1, d) == Position{1, 1});
  CHECK(target_position(7, d) == Position{2, 3});
  CHECK(target_position(12, d) == Position{3, 4});
  CHECK_THROWS_AS(target_position(0, d), std::domain_error);
  CHECK_THROWS_AS(target_position(13, d), std::domain_error);
}

TEST_CASE("dims reject degenerate boards") {
  CHECK_THROWS_AS(Dims(1, 5), std::domain_error);
  CHECK_THROWS_AS(Dims(4, 1), std::domain_error);
  CHECK_NOTHROW(Dims(2, 2));
}

TEST_CASE("unit rotations move cells as specified") {
  auto b = make(Dims(2, 2), {1, 2, 3, 4});
  b.apply(Move::row(1, Dir::Right));
  CHECK(b.cells() == std::vector<Value>{2, 1, 3, 4});

  auto c = make(Dims(2, 2), {1, 2, 3, 4});
  c.apply(Move::col(1, Dir::Down, 2));  // full cycle
  CHECK(c.cells() == std::vector<Value>{1, 2, 3, 4});

  auto e = make(Dims(2, 3), {1, 2, 3, 4, 5, 6});
  e.apply(Move::row(2, Dir::Right));
  CHECK(e.cells() == std::vector<Value>{1, 2, 3, 6, 4, 5});
}

TEST_CASE("moves validate axis and range") {
  NaiveBoard b(Dims(3, 3));
  CHECK_THROWS_AS(b.apply(Move{Line{Axis::Row, 1}, Dir::Down, 1}), std::domain_error);
  CHECK_THROWS_AS(b.apply(Move::row(4, Dir::Right)), std::domain_error);
  CHECK_THROWS_AS(b.apply(Move::col(0, Dir::Down)), std::domain_error);
}

TEST_CASE("column predicates evaluate the three definitions") {
  NaiveBoard sorted(Dims(3, 3));
  const auto p = column_predicates(sorted, 2);
  CHECK(p.near_full);
  CHECK(p.body_full);
  CHECK(p.body_sorted);

  // body of C_1 is {1}: targets column 1 (near-full) but the body-full
  // set would be {3}.
  const auto q = column_predicates(make(Dims(2, 2), {4, 2, 1, 3}), 1);
  CHECK(q.near_full);
  CHECK_FALSE(q.body_full);
  CHECK_FALSE(q.body_sorted);

  const auto r = column_predicates(make(Dims(2, 2), {3, 4, 1, 2}), 1);
  CHECK(r.near_full);
  CHECK_FALSE(r.body_full);
  CHECK_FALSE(r.body_sorted);

  // implication chain body_sorted => body_full => near_full on random boards
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Dims d(2 + int(rng.below(5)), 2 + int(rng.below(5)));
    const auto board = random_board(d, rng);
    for (int j = 1; j <= d.n; ++j) {
      const auto pr = column_predicates(board, j);
      if (pr.body_sorted) CHECK(pr.body_full);
      if (pr.body_full) CHECK(pr.near_full);
    }
  }
}

TEST_CASE("is_sorted") {
  NaiveBoard b(Dims(4, 4));
  CHECK(is_sorted(b));
  b.apply(Move::row(1, Dir::Right));
  CHECK_FALSE(is_sorted(b));
  CHECK_FALSE(is_sorted(make(Dims(2, 2), {1, 2, 4, 3})));
}

TEST_CASE("board parity by cycle counting") {
  CHECK(board_parity(NaiveBoard(Dims(3, 3))) == Parity::Even);
  CHECK(board_parity(make(Dims(2, 2), {2, 1, 3, 4})) == Parity::Odd);
  NaiveBoard b(Dims(3, 3));
  b.apply(Move::row(1, Dir::Right));  // 3-cycle
  CHECK(board_parity(b) == Parity::Even);
}

TEST_CASE("sortability characterization") {
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    CHECK(is_sortable(random_board(Dims(2, 3), rng)));  // m even
  }
  auto odd = NaiveBoard(Dims(3, 3)).to_cells();
  std::swap(odd[7], odd[8]);
  CHECK_FALSE(is_sortable(NaiveBoard(Dims(3, 3), odd)));
  // any single rotation of the sorted odd-by-odd board stays even
  for (int j = 1; j <= 3; ++j) {
    NaiveBoard b(Dims(3, 3));
    b.apply(Move::col(j, Dir::Down));
    CHECK(is_sortable(b));
  }
}

TEST_CASE("rotation group identities", "[property]") {
  SplitMix64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const Dims d(2 + int(rng.below(7)), 2 + int(rng.below(7)));
    const auto start = random_board(d, rng);
    auto b = start;
    const Move mv = random_move(d, rng);
    b.apply(mv);
    {
      auto undo = b;
      undo.apply(Move{mv.line, reversed(mv.dir), mv.count});
      CHECK(undo == start);
    }
    {
      // d^1 followed by d^(L-1) is a full cycle
      auto full = start;
      const int len = line_length(mv.line, d);
      full.apply(Move{mv.line, mv.dir, 1});
      full.apply(Move{mv.line, mv.dir, len - 1});
      CHECK(full == start);
    }
  }
}

TEST_CASE("unit rotation flips parity exactly when the line length is even", "[property]") {
  SplitMix64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const Dims d(2 + int(rng.below(6)), 2 + int(rng.below(6)));
    auto b = random_board(d, rng);
    const Parity before = board_parity(b);
    Move mv = random_move(d, rng);
    mv.count = 1;
    b.apply(mv);
    const int len = line_length(mv.line, d);
    if (len % 2 == 0) {
      CHECK(board_parity(b) == opposite(before));
    } else {
      CHECK(board_parity(b) == before);
    }
  }
  // hence parity is invariant on odd-by-odd boards
  SplitMix64 rng2(29);
  for (int t = 0; t < 50; ++t) {
    auto b = random_board(Dims(3, 5), rng2);
    const Parity before = board_parity(b);
    for (int s = 0; s < 20; ++s) b.apply(random_move(b.dims(), rng2));
    CHECK(board_parity(b) == before);
  }
}

TEST_CASE("fast and naive engines agree over fuzzed move sequences", "[fuzz]") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const Dims d(2 + int(rng.below(15)), 2 + int(rng.below(15)));
    const auto start = random_board(d, rng);
    NaiveBoard naive = start;
    FastBoard fast(start);
    const std::int64_t len = std::min<std::int64_t>(10 * d.cells(), 400);
    const auto steps = std::int64_t(rng.below(std::uint64_t(len))) + 1;
    for (std::int64_t s = 0; s < steps; ++s) {
      const Move mv = random_move(d, rng);
      naive.apply(mv);
      fast.apply(mv);
    }
    REQUIRE(fast.to_cells() == naive.cells());
    // multiset invariant
    auto sortedcells = naive.cells();
    std::sort(sortedcells.begin(), sortedcells.end());
    for (std::size_t i = 0; i < sortedcells.size(); ++i) REQUIRE(sortedcells[i] == Value(i + 1));
  }
}

TEST_CASE("move log counts pushes and drags") {
  MoveLog log;
  log.append(Move::row(1, Dir::Right));
  log.append(Move::row(1, Dir::Right));
  log.append(Move::col(2, Dir::Down));
  CHECK(log.push_count() == 3);
  CHECK(log.drag_count() == 2);
  CHECK(log.moves().size() == 2);  // r1 run collapsed
  CHECK(log.moves()[0] == Move::row(1, Dir::Right, 2));

  // direction change on the same line: same drag run, no collapse
  MoveLog log2;
  log2.append(Move::row(1, Dir::Right));
  log2.append(Move::row(1, Dir::Left));
  CHECK(log2.drag_count() == 1);
  CHECK(log2.moves().size() == 2);

  SplitMix64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Dims d(3, 4);
    MoveLog l;
    std::vector<Move> raw;
    const auto steps = rng.below(40) + 1;
    for (std::uint64_t s = 0; s < steps; ++s) {
      const Move mv = random_move(d, rng);
      raw.push_back(mv);
      l.append(mv);
    }
    const auto direct = recount(raw);
    CHECK(l.push_count() == direct.push);
    CHECK(l.drag_count() == direct.drag);
    // collapsed log replays to the same state as the raw sequence
    NaiveBoard a(d), b(d);
    replay(a, std::span<const Move>(raw));
    replay(b, std::span<const Move>(l.moves()));
    CHECK(a == b);
  }
}

TEST_CASE("normalizer rejects identity moves") {
  const Dims d(3, 5);
  CHECK(normalized(Move::row(1, Dir::Right, 7), d).count == 2);
  CHECK_THROWS_AS(normalized(Move::row(1, Dir::Right, 5), d), std::domain_error);
  CHECK_THROWS_AS(normalized(Move::col(2, Dir::Down, 6), d), std::domain_error);
  CHECK(normalized(Move::col(2, Dir::Down, 4), d).count == 1);
}
