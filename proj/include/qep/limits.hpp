#pragma once

#include <cstddef>

namespace qep {

// Size caps for the exhaustive procedures. All of them are exponential in
// the number of atoms, so they refuse oversized inputs instead of hanging.
struct Limits {
  // Atoms enumerated by equilibrium_models (3^n interpretations).
  std::size_t model_atoms = 20;
  // Binder length for policy enumeration, QASP recursion and QEM.
  std::size_t binder = 8;
  // Binder length for the brute-force oracle.
  std::size_t oracle_binder = 6;

  // Defaults, with every cap replaced by QEP_MAX_VARS when that variable
  // holds a positive integer.
  static Limits from_environment();
};

}  // namespace qep
