#pragma once

#include <cstdint>
#include <map>

#include "qep/formula.hpp"
#include "qep/limits.hpp"
#include "qep/policy.hpp"
#include "qep/semantics.hpp"

namespace qep {

// <m, policy> is an equilibrium configuration of binder/matrix when every
// interpretation reachable from m through the policy is an equilibrium model
// of the matrix over the binder's and the matrix's atoms.
bool is_equilibrium_configuration(const Interp3& m, const QbfPolicy& policy,
                                  const Binder& binder, const Theory& matrix);

struct OracleResult {
  QbfPolicySet policies;
  // For each accepted policy, its leaves' interpretations.
  std::map<QbfPolicy, InterpSet> witnesses;
  std::uint64_t inspected = 0;
};

// Equilibrium policies by exhaustion: every binary policy of the binder is
// checked against the equilibrium models of the matrix, computed once. Shares
// no code with the elimination procedure. Throws CapExceeded past
// limits.oracle_binder or limits.model_atoms.
OracleResult brute_equilibrium_policies(const Binder& binder, const Theory& matrix,
                                        const Limits& limits = {});

}  // namespace qep
