#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetflow/defs.hpp"

namespace jetflow {

// Process-wide registry of parameter names.  Parameters occupy the tail
// slots of every monomial; registration is append-only so slot numbers
// stay stable for the lifetime of the process.
class ParamRegistry {
 public:
  static ParamRegistry& instance();

  // Returns the slot for `name`, registering it if new.  Throws ShapeError
  // when the name collides with a built-in generator or the table is full.
  int intern(const std::string& name);

  // Slot lookup without registration.
  std::optional<int> find(const std::string& name) const;

  const std::string& name_of(int slot) const;
  int count() const { return static_cast<int>(names_.size()); }

 private:
  ParamRegistry() = default;
  std::vector<std::string> names_;
};

// Printable name of any slot ("x", "u", "u3", "r", or a parameter name).
std::string slot_name(int slot);

// Resolves an identifier to a slot: x, u, u0..u12 (ux/uxx aliases), or a
// registered parameter.  Returns nullopt for unknown identifiers.
std::optional<int> resolve_identifier(const std::string& ident);

}  // namespace jetflow
