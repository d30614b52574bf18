#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torus {

using Value = std::uint32_t;

enum class Parity : std::uint8_t { Even, Odd };

inline Parity opposite(Parity p) {
  return p == Parity::Even ? Parity::Odd : Parity::Even;
}

inline const char* to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

/// Board dimensions. Both sides must be at least 2; 1xk boards are
/// rejected at construction time.
struct Dims {
  int m = 0;  // rows
  int n = 0;  // columns

  Dims() = default;
  Dims(int rows, int cols) : m(rows), n(cols) {
    if (m < 2 || n < 2) {
      throw std::domain_error("Dims: both dimensions must be >= 2, got " +
                              std::to_string(m) + "x" + std::to_string(n));
    }
  }

  std::int64_t cells() const { return std::int64_t(m) * n; }
  Dims transposed() const { return Dims(n, m); }

  friend bool operator==(const Dims& a, const Dims& b) {
    return a.m == b.m && a.n == b.n;
  }
  friend bool operator!=(const Dims& a, const Dims& b) { return !(a == b); }
};

struct Position {
  int row = 0;
  int col = 0;
  friend bool operator==(const Position& a, const Position& b) {
    return a.row == b.row && a.col == b.col;
  }
};

/// Row the value x occupies in the sorted configuration (1-based).
inline int target_row(Value x, const Dims& d) {
  return int((std::int64_t(x) - 1) / d.n) + 1;
}

/// Column the value x occupies in the sorted configuration (1-based).
inline int target_col(Value x, const Dims& d) {
  return int((std::int64_t(x) - 1) % d.n) + 1;
}

inline Position target_position(Value x, const Dims& d) {
  if (x < 1 || std::int64_t(x) > d.cells()) {
    throw std::domain_error("target_position: value " + std::to_string(x) +
                            " out of range 1.." + std::to_string(d.cells()));
  }
  return Position{target_row(x, d), target_col(x, d)};
}

/// Value held at (i, j) in the sorted configuration.
inline Value sorted_value(const Dims& d, int i, int j) {
  return Value(std::int64_t(i - 1) * d.n + j);
}

}  // namespace torus
