#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/dims.hpp"

namespace torus {

/// Permutation of {1..size} with the left-to-right composition
/// convention: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int size) : img_(size) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  /// From a one-line image array: img[i-1] = p(i).
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > int(img_.size()) || seen[v - 1]) {
        throw std::domain_error("Permutation: image is not a bijection");
      }
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int size) { return Permutation(size); }

  /// Build from disjoint cycles over {1..size}.
  static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
    Permutation p(size);
    std::vector<bool> used(size, false);
    for (const auto& cyc : cycles) {
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        const int a = cyc[t];
        const int b = cyc[(t + 1) % cyc.size()];
        if (a < 1 || a > size || used[a - 1]) {
          throw std::domain_error("Permutation::from_cycles: bad or repeated element");
        }
        used[a - 1] = true;
        p.img_[a - 1] = b;
      }
    }
    return p;
  }

  static Permutation transposition(int size, int a, int b) {
    if (a == b) throw std::domain_error("transposition: elements must differ");
    return from_cycles(size, {{a, b}});
  }

  int size() const { return int(img_.size()); }
  int apply(int x) const {
    if (x < 1 || x > size()) throw std::domain_error("Permutation::apply: out of range");
    return img_[x - 1];
  }
  int operator()(int x) const { return apply(x); }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i) {
      if (img_[i - 1] != i) return false;
    }
    return true;
  }

  bool is_involution() const {
    for (int i = 1; i <= size(); ++i) {
      if (img_[img_[i - 1] - 1] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

  /// Nontrivial cycles, each rotated to start at its smallest element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int s = 1; s <= size(); ++s) {
      if (seen[s - 1] || img_[s - 1] == s) continue;
      std::vector<int> cyc;
      int cur = s;
      while (!seen[cur - 1]) {
        seen[cur - 1] = true;
        cyc.push_back(cur);
        cur = img_[cur - 1];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cs) {
      os << '(';
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        if (t) os << ' ';
        os << cyc[t];
      }
      os << ')';
    }
    return os.str();
  }

 private:
  std::vector<int> img_;
};

/// Left-to-right product: apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::domain_error("compose: size mismatch");
  std::vector<int> img(p.size());
  for (int i = 1; i <= p.size(); ++i) img[i - 1] = q.apply(p.apply(i));
  return Permutation(std::move(img));
}

inline Permutation invert(const Permutation& p) {
  std::vector<int> img(p.size());
  for (int i = 1; i <= p.size(); ++i) img[p.apply(i) - 1] = i;
  return Permutation(std::move(img));
}

/// Parity via cycle counting: parity of (size - #cycles), fixed points
/// included.
inline Parity parity(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (int s = 1; s <= p.size(); ++s) {
    if (seen[s - 1]) continue;
    ++cycles;
    int cur = s;
    while (!seen[cur - 1]) {
      seen[cur - 1] = true;
      cur = p.apply(cur);
    }
  }
  return ((p.size() - cycles) % 2 == 0) ? Parity::Even : Parity::Odd;
}

/// Number of 2-cycles.
inline int a2(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    const int j = p.apply(i);
    if (j > i && p.apply(j) == i) ++count;
  }
  return count;
}

enum class CycleVariant { Balanced, Plus, Minus };

/// sigma * upsilon (left-to-right) factorization of a single cycle into
/// two involutions, following the explicit nested-pair construction.
///
/// Balanced requires odd cycle length 2k+1 and gives a2 = k on both
/// sides. Plus/Minus require even length 2k and give a2(sigma) =
/// a2(upsilon) +/- 1. The cycle's elements are taken in cycle order;
/// positions 1..len below index into that order.
inline std::pair<Permutation, Permutation> cycle_involutions(int size,
                                                             const std::vector<int>& cycle,
                                                             CycleVariant variant) {
  const int len = int(cycle.size());
  if (len < 2) throw std::domain_error("cycle_involutions: cycle length must be >= 2");
  {
    std::vector<bool> seen(size, false);
    for (int v : cycle) {
      if (v < 1 || v > size || seen[v - 1]) throw std::domain_error("cycle_involutions: bad cycle");
      seen[v - 1] = true;
    }
  }
  const bool even_len = len % 2 == 0;
  if (variant == CycleVariant::Balanced && even_len) {
    throw std::domain_error("cycle_involutions: Balanced requires an odd-length cycle");
  }
  if (variant != CycleVariant::Balanced && !even_len) {
    throw std::domain_error("cycle_involutions: Plus/Minus require an even-length cycle");
  }

  std::vector<std::vector<int>> sig, ups;
  auto at = [&](int pos) { return cycle[pos - 1]; };
  if (variant == CycleVariant::Balanced) {
    const int k = (len - 1) / 2;
    for (int i = 1; i <= k; ++i) sig.push_back({at(i), at(2 * k + 2 - i)});
    for (int i = 1; i <= k; ++i) ups.push_back({at(i + 1), at(2 * k + 2 - i)});
  } else if (variant == CycleVariant::Plus) {
    const int k = len / 2;
    for (int i = 1; i <= k; ++i) sig.push_back({at(i), at(2 * k + 1 - i)});
    for (int i = 1; i <= k - 1; ++i) ups.push_back({at(i + 1), at(2 * k + 1 - i)});
  } else {
    const int k = len / 2;
    for (int i = 1; i <= k - 1; ++i) sig.push_back({at(i), at(2 * k - i)});
    for (int i = 1; i <= k; ++i) ups.push_back({at(i), at(2 * k + 1 - i)});
  }
  return {Permutation::from_cycles(size, sig), Permutation::from_cycles(size, ups)};
}

struct InvolutionPair {
  Permutation sigma;
  Permutation upsilon;
  std::optional<Permutation> tau;  // present exactly when the input is odd
};

/// Factor p as sigma * upsilon (even p) or sigma * upsilon * tau (odd
/// p), with a2(sigma) = a2(upsilon) in both cases.
///
/// Odd-length cycles use the Balanced construction; even-length cycles
/// alternate Minus, Plus, Minus, ... ordered by smallest cycle element.
/// For odd p the final Minus upsilon donates the transposition holding
/// the cycle's smallest element as tau.
inline InvolutionPair involution_factorization(const Permutation& p) {
  const int size = p.size();
  std::vector<std::vector<int>> sig_cycles, ups_cycles;
  std::optional<Permutation> tau;

  std::vector<std::vector<int>> even_len_cycles;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() % 2 == 1) {
      auto [s, u] = cycle_involutions(size, cyc, CycleVariant::Balanced);
      for (auto& c : s.cycles()) sig_cycles.push_back(c);
      for (auto& c : u.cycles()) ups_cycles.push_back(c);
    } else {
      even_len_cycles.push_back(cyc);
    }
  }

  const bool odd = parity(p) == Parity::Odd;
  for (std::size_t idx = 0; idx < even_len_cycles.size(); ++idx) {
    const auto& cyc = even_len_cycles[idx];
    const bool minus = idx % 2 == 0;
    auto [s, u] = cycle_involutions(size, cyc, minus ? CycleVariant::Minus : CycleVariant::Plus);
    const bool last = idx + 1 == even_len_cycles.size();
    if (odd && last) {
      // Split off the upsilon transposition containing the cycle's
      // smallest element; the remainder keeps the a2 balance.
      const int anchor = cyc.front();
      std::vector<std::vector<int>> kept;
      for (auto& c : u.cycles()) {
        if (std::find(c.begin(), c.end(), anchor) != c.end()) {
          tau = Permutation::from_cycles(size, {c});
        } else {
          kept.push_back(c);
        }
      }
      if (!tau) throw std::logic_error("involution_factorization: missing tau transposition");
      for (auto& c : s.cycles()) sig_cycles.push_back(c);
      for (auto& c : kept) ups_cycles.push_back(c);
    } else {
      for (auto& c : s.cycles()) sig_cycles.push_back(c);
      for (auto& c : u.cycles()) ups_cycles.push_back(c);
    }
  }

  InvolutionPair out{Permutation::from_cycles(size, sig_cycles),
                     Permutation::from_cycles(size, ups_cycles), std::move(tau)};
  return out;
}

}  // namespace torus
