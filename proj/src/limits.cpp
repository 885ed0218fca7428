#include "qep/limits.hpp"

#include <cstdlib>
#include <string>

namespace qep {

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("QEP_MAX_VARS");
  if (raw == nullptr) return limits;
  try {
    std::size_t used = 0;
    unsigned long value = std::stoul(raw, &used);
    if (used == std::string(raw).size() && value > 0) {
      limits.model_atoms = value;
      limits.binder = value;
      limits.oracle_binder = value;
    }
  } catch (const std::exception&) {
    // Unparseable values leave the defaults in place.
  }
  return limits;
}

}  // namespace qep
