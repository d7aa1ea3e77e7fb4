#include "jetflow/defs.hpp"
#include <cstdio>

namespace jetflow {

std::string to_hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace jetflow
