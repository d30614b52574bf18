#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "torus/permutation.hpp"
#include "torus/rng.hpp"

using namespace torus;

namespace {

Permutation random_permutation(int size, SplitMix64& rng) {
  std::vector<int> img(size);
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation(std::move(img));
}

void check_factorization(const Permutation& p) {
  const InvolutionPair f = involution_factorization(p);
  REQUIRE(f.sigma.is_involution());
  REQUIRE(f.upsilon.is_involution());
  REQUIRE(a2(f.sigma) == a2(f.upsilon));
  Permutation product = compose(f.sigma, f.upsilon);
  if (parity(p) == Parity::Odd) {
    REQUIRE(f.tau.has_value());
    REQUIRE(a2(*f.tau) == 1);
    product = compose(product, *f.tau);
  } else {
    REQUIRE_FALSE(f.tau.has_value());
  }
  REQUIRE(product == p);
}

}  // namespace

TEST_CASE("group operations under the left-to-right convention") {
  const auto t12 = Permutation::transposition(4, 1, 2);
  CHECK(compose(t12, t12).is_identity());

  const auto c123 = Permutation::from_cycles(3, {{1, 2, 3}});
  CHECK(compose(c123, c123).apply(1) == 3);  // (1 2 3)^2 = (1 3 2)
  CHECK(parity(c123) == Parity::Even);
  CHECK(parity(Permutation::from_cycles(4, {{1, 2, 3, 4}})) == Parity::Odd);

  const auto mixed = Permutation::from_cycles(7, {{1, 2}, {3, 4}, {5, 6, 7}});
  CHECK(a2(mixed) == 2);
  CHECK(invert(mixed).apply(2) == 1);
  CHECK(compose(mixed, invert(mixed)).is_identity());

  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::domain_error);

  const auto cycles = mixed.cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == std::vector<int>{1, 2});
  CHECK(cycles[2] == std::vector<int>{5, 6, 7});
  CHECK(mixed.cycle_string() == "(1 2)(3 4)(5 6 7)");
}

TEST_CASE("cycle_involutions matches the explicit constructions") {
  {
    auto [s, u] = cycle_involutions(3, {1, 2, 3}, CycleVariant::Balanced);
    CHECK(s == Permutation::from_cycles(3, {{1, 3}}));
    CHECK(u == Permutation::from_cycles(3, {{2, 3}}));
    CHECK(compose(s, u) == Permutation::from_cycles(3, {{1, 2, 3}}));
    CHECK(a2(s) == 1);
    CHECK(a2(u) == 1);
  }
  {
    auto [s, u] = cycle_involutions(4, {1, 2, 3, 4}, CycleVariant::Plus);
    CHECK(s == Permutation::from_cycles(4, {{1, 4}, {2, 3}}));
    CHECK(u == Permutation::from_cycles(4, {{2, 4}}));
    CHECK(compose(s, u) == Permutation::from_cycles(4, {{1, 2, 3, 4}}));
    CHECK(a2(s) == 2);
    CHECK(a2(u) == 1);
  }
  {
    auto [s, u] = cycle_involutions(4, {1, 2, 3, 4}, CycleVariant::Minus);
    CHECK(s == Permutation::from_cycles(4, {{1, 3}}));
    CHECK(u == Permutation::from_cycles(4, {{1, 4}, {2, 3}}));
    CHECK(compose(s, u) == Permutation::from_cycles(4, {{1, 2, 3, 4}}));
    CHECK(a2(s) == 1);
    CHECK(a2(u) == 2);
  }
  {
    auto [s, u] = cycle_involutions(2, {1, 2}, CycleVariant::Minus);
    CHECK(s.is_identity());
    CHECK(u == Permutation::transposition(2, 1, 2));
  }
  CHECK_THROWS_AS(cycle_involutions(4, {1, 2, 3, 4}, CycleVariant::Balanced), std::domain_error);
  CHECK_THROWS_AS(cycle_involutions(3, {1, 2, 3}, CycleVariant::Plus), std::domain_error);
  CHECK_THROWS_AS(cycle_involutions(3, {1, 2, 3}, CycleVariant::Minus), std::domain_error);
}

TEST_CASE("cycle_involutions works on arbitrary element labels") {
  auto [s, u] = cycle_involutions(6, {2, 5, 3}, CycleVariant::Balanced);
  CHECK(compose(s, u) == Permutation::from_cycles(6, {{2, 5, 3}}));
  for (auto [len, variant] :
       std::vector<std::pair<int, CycleVariant>>{{5, CycleVariant::Balanced},
                                                 {6, CycleVariant::Plus},
                                                 {6, CycleVariant::Minus}}) {
    std::vector<int> cyc;
    for (int i = 0; i < len; ++i) cyc.push_back(2 * i + 1);  // odd labels
    auto [sg, ug] = cycle_involutions(2 * len, cyc, variant);
    CHECK(sg.is_involution());
    CHECK(ug.is_involution());
    CHECK(compose(sg, ug) == Permutation::from_cycles(2 * len, {cyc}));
  }
}

TEST_CASE("involution_factorization worked examples") {
  check_factorization(Permutation::identity(5));
  {
    const auto p = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    const auto f = involution_factorization(p);
    CHECK(f.sigma == Permutation::from_cycles(4, {{3, 4}}));
    CHECK(f.upsilon == Permutation::from_cycles(4, {{1, 2}}));
    CHECK_FALSE(f.tau.has_value());
    check_factorization(p);
  }
  {
    const auto p = Permutation::transposition(2, 1, 2);
    const auto f = involution_factorization(p);
    CHECK(f.sigma.is_identity());
    CHECK(f.upsilon.is_identity());
    REQUIRE(f.tau.has_value());
    CHECK(*f.tau == p);
  }
}

TEST_CASE("involution_factorization is exhaustive-correct for small sizes") {
  for (int size = 2; size <= 7; ++size) {
    std::vector<int> img(size);
    std::iota(img.begin(), img.end(), 1);
    do {
      check_factorization(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("involution_factorization holds on random permutations", "[property]") {
  SplitMix64 rng(12345);
  for (int t = 0; t < 10000; ++t) {
    const int size = 2 + int(rng.below(63));
    const auto p = random_permutation(size, rng);
    check_factorization(p);
    CHECK(parity(p) == parity(invert(p)));
  }
}
