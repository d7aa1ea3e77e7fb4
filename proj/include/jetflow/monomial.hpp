#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "jetflow/defs.hpp"

namespace jetflow {

// Exponent vector over the fixed slot layout.  Ordering is graded
// lexicographic: higher total degree first, ties broken by comparing
// exponents from the highest slot (parameters) down to x.
struct Monomial {
  std::array<std::uint16_t, kNumSlots> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return Monomial{}; }

  static Monomial var(int slot, int k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(k);
    m.deg = static_cast<std::uint32_t>(k);
    return m;
  }

  bool is_one() const { return deg == 0; }
  int exp(int slot) const { return e[static_cast<std::size_t>(slot)]; }

  void set_exp(int slot, int k) {
    auto s = static_cast<std::size_t>(slot);
    deg += static_cast<std::uint32_t>(k) - e[s];
    e[s] = static_cast<std::uint16_t>(k);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kNumSlots; ++i)
      m.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    m.deg = deg + o.deg;
    return m;
  }

  bool divisible_by(const Monomial& o) const {
    for (std::size_t i = 0; i < kNumSlots; ++i)
      if (e[i] < o.e[i]) return false;
    return true;
  }

  // Requires divisible_by(o).
  Monomial operator/(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kNumSlots; ++i)
      m.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    m.deg = deg - o.deg;
    return m;
  }

  bool operator==(const Monomial& o) const {
    return deg == o.deg &&
           std::memcmp(e.data(), o.e.data(), sizeof(e)) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded-lex "greater than": the leading monomial of a polynomial is the
  // maximum under this order.
  bool operator>(const Monomial& o) const {
    if (deg != o.deg) return deg > o.deg;
    for (int i = kNumSlots - 1; i >= 0; --i) {
      auto s = static_cast<std::size_t>(i);
      if (e[s] != o.e[s]) return e[s] > o.e[s];
    }
    return false;
  }
  bool operator<(const Monomial& o) const { return o > *this; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < kNumSlots; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace jetflow
