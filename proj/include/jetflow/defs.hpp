#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetflow {

// Generator slot layout for the differential-polynomial ring.
//
//   slot 0            : x (the space variable)
//   slot 1 .. 17      : u, u1, ..., u16   (jet of order slot-1)
//   slot 18           : r (the adjoined algebraic element, r^m = radicand)
//   slot 19 .. 63     : named parameters, registered on first use
//
// Operations that would create a jet beyond kJetOrderCap throw OrderError;
// the extra slots are headroom so intermediate objects can be inspected
// before the cap check fires.
inline constexpr int kSlotX = 0;
inline constexpr int kSlotU0 = 1;
inline constexpr int kMaxJetOrder = 16;
inline constexpr int kSlotR = kSlotU0 + kMaxJetOrder + 1;  // 18
inline constexpr int kFirstParamSlot = kSlotR + 1;         // 19
inline constexpr int kNumSlots = 64;
inline constexpr int kMaxParams = kNumSlots - kFirstParamSlot;

inline constexpr int kJetOrderCap = 16;

inline constexpr int jet_slot(int order) { return kSlotU0 + order; }
inline constexpr int slot_jet_order(int slot) { return slot - kSlotU0; }
inline constexpr bool is_jet_slot(int slot) {
  return slot >= kSlotU0 && slot <= kSlotU0 + kMaxJetOrder;
}
inline constexpr bool is_param_slot(int slot) { return slot >= kFirstParamSlot; }

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Jet order cap exceeded, or an operation saw a jet it cannot handle.
struct OrderError : Error {
  using Error::Error;
};

// Division by zero, non-exact division, or inversion of zero.
struct DivisionError : Error {
  using Error::Error;
};

// Anything that violates the one-radical-per-context discipline, or a
// radicand outside the supported shape.
struct RadicalError : Error {
  using Error::Error;
};

// Root extraction failed: the operand is not gamma * (k-th power) for any
// usable k-th power.  When the failure is purely a scalar obstruction the
// offending rational is carried so the caller can renormalize.
struct RootError : Error {
  explicit RootError(const std::string& what) : Error(what) {}
  RootError(const std::string& what, const mpq_class& obstruction)
      : Error(what), scalar_obstruction(obstruction), has_obstruction(true) {}
  mpq_class scalar_obstruction{0};
  bool has_obstruction = false;
};

// Malformed input text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        offset(position) {}
  std::size_t offset;
};

// An operand fails a structural precondition (wrong shape, missing slot, ...).
struct ShapeError : Error {
  using Error::Error;
};

// 64-bit FNV-1a, used for stable content digests in reports and goldens.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex16(std::uint64_t v);

}  // namespace jetflow
