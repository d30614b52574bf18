#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "torus/orientation.hpp"
#include "torus/rng.hpp"

using namespace torus;

namespace {
NaiveBoard random_board(const Dims& d, SplitMix64& rng) {
  std::vector<Value> cells(d.cells());
  std::iota(cells.begin(), cells.end(), Value(1));
  for (std::size_t i = cells.size(); i > 1; --i) std::swap(cells[i - 1], cells[rng.below(i)]);
  return NaiveBoard(d, std::move(cells));
}

Orientation random_orientation(SplitMix64& rng) {
  return Orientation{rng.below(2) == 1, rng.below(2) == 1, rng.below(2) == 1};
}
}  // namespace

TEST_CASE("transposing swaps the roles of rows and columns") {
  SplitMix64 rng(3);
  const auto board = random_board(Dims(4, 3), rng);
  const auto view = reorient(board, Orientation{.transposed = true});
  CHECK(view.board.dims() == Dims(3, 4));
  const Move mapped = view.map.to_original(Move::col(2, Dir::Down, 1));
  CHECK(mapped == Move::row(2, Dir::Right, 1));
  CHECK(view.map.to_original(Move::row(1, Dir::Right, 5)) == Move::col(1, Dir::Down, 5));
}

TEST_CASE("identity orientation is the identity map") {
  SplitMix64 rng(4);
  const auto board = random_board(Dims(3, 4), rng);
  const auto view = reorient(board, Orientation{});
  CHECK(view.board.cells() == board.cells());
  const Move mv = Move::col(2, Dir::Up, 3);
  CHECK(view.map.to_original(mv) == mv);
}

TEST_CASE("view is sorted exactly when the original is") {
  SplitMix64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Dims d(2 + int(rng.below(4)), 2 + int(rng.below(4)));
    const auto board = random_board(d, rng);
    const auto o = random_orientation(rng);
    const auto view = reorient(board, o);
    CHECK(is_sorted(view.board) == is_sorted(board));
    const auto sorted_view = reorient(NaiveBoard(d), o);
    CHECK(is_sorted(sorted_view.board));
  }
}

TEST_CASE("mapped moves replay identically on the original board", "[property]") {
  SplitMix64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Dims d(2 + int(rng.below(5)), 2 + int(rng.below(5)));
    auto board = random_board(d, rng);
    const auto o = random_orientation(rng);
    auto view = reorient(board, o);

    // random walk on the view, mirrored onto the original via the mapper
    for (int s = 0; s < 30; ++s) {
      const Dims vd = view.board.dims();
      Move mv = rng.below(2) ? Move::row(int(rng.below(std::uint64_t(vd.m))) + 1,
                                         rng.below(2) ? Dir::Right : Dir::Left,
                                         std::int64_t(rng.below(3)) + 1)
                             : Move::col(int(rng.below(std::uint64_t(vd.n))) + 1,
                                         rng.below(2) ? Dir::Down : Dir::Up,
                                         std::int64_t(rng.below(3)) + 1);
      view.board.apply(mv);
      board.apply(view.map.to_original(mv));
    }
    CHECK(reorient(board, o).board.cells() == view.board.cells());
  }
}

TEST_CASE("orientation composed with its inverse fixes positions") {
  SplitMix64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Dims d(2 + int(rng.below(5)), 2 + int(rng.below(5)));
    const FrameMap map(d, random_orientation(rng));
    for (int i = 1; i <= map.view_dims().m; ++i) {
      for (int j = 1; j <= map.view_dims().n; ++j) {
        CHECK(map.to_view(map.to_original(Position{i, j})) == Position{i, j});
      }
    }
    for (Value x = 1; std::int64_t(x) <= d.cells(); ++x) {
      CHECK(map.original_value(map.view_value(x)) == x);
    }
  }
}
