#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qep/formula.hpp"
#include "qep/limits.hpp"
#include "qep/policy.hpp"
#include "qep/semantics.hpp"

namespace qep {

// Intermediate result of quantifier elimination for a binder suffix under a
// conditioning interpretation m:
//   policies           binary policies for the suffix whose leaves all model
//                      the matrix in G3 under m (the T component)
//   non_crisp_models   non-crisp G3 models of the matrix that agree with m
//                      outside the suffix; they can still refute the
//                      minimality of crisp candidates higher up (HC)
struct ThetaPair {
  QbfPolicySet policies;
  InterpSet non_crisp_models;

  friend bool operator==(const ThetaPair&, const ThetaPair&) = default;
};

// What happens to the policies of a pair whose conditioning interpretation
// holds a 1/2. Every member of such a policy is a non-crisp model, so the
// policy can never be part of an equilibrium policy itself.
enum class NonCrispPolicies {
  // Keep them in the policy set. A universal merge that meets an empty side,
  // or a rejected candidate, then drops their members, although those still
  // refute crisp candidates one level up.
  keep,
  // Move their members into the non-crisp part and leave the policy set
  // empty.
  fold,
};

struct QemOptions {
  NonCrispPolicies non_crisp_policies = NonCrispPolicies::fold;
  // Keep only the strictly-below-minimal members of each non-crisp part.
  bool prune_hc = false;
  // Re-validate every intermediate pair; violations throw std::logic_error.
  bool check_invariants = false;
  // Receives one line per elimination step:
  //   QEM <binder-remainder> | m={<interp>} -> |T|=<n> |HC|=<k>
  std::function<void(const std::string&)> trace;
  Limits limits;
};

// Where a merge happens: the binder left after the eliminated atom, the
// matrix and the interpretation the merged pair is conditioned by.
struct EliminationContext {
  Binder remainder;
  Theory matrix;
  Interp3 conditioning;
};

// Base case for the binder "exists x".
ThetaPair qem_base_exists(const Atom& x, const Theory& matrix, const Interp3& m);
// Base case for the binder "forall x".
ThetaPair qem_base_forall(const Atom& x, const Theory& matrix, const Interp3& m);

// Combine the pairs computed under x=0, x=1/2 and x=1 for "exists x" /
// "forall x" followed by ctx.remainder. A candidate built from a policy pi of
// the x=1 pair survives only if no interpretation reachable through pi is
// strictly above a member of pHalf's non-crisp part or reachable through one
// of pHalf's policies.
ThetaPair mc_exists(const Atom& x, const ThetaPair& p0, const ThetaPair& p_half,
                    const ThetaPair& p1, const EliminationContext& ctx);
ThetaPair mc_forall(const Atom& x, const ThetaPair& p0, const ThetaPair& p_half,
                    const ThetaPair& p1, const EliminationContext& ctx);

// Moves the members of pair's policies into its non-crisp part when
// conditioning is not crisp; identity otherwise.
ThetaPair fold_non_crisp(ThetaPair pair, const Binder& binder, const Interp3& conditioning);

// Quantifier elimination from the outermost quantifier inwards. Throws
// std::invalid_argument for an empty binder or when m leaves a matrix atom
// outside the binder undefined (or defines a bound one), CapExceeded when the
// binder is too long.
ThetaPair qem(const Binder& binder, const Theory& matrix, const Interp3& m,
              const QemOptions& options = {});

// The equilibrium policies of the theory: qem(...).policies conditioned by
// the empty interpretation, or by conditioning when the theory has free atoms.
// An empty binder yields {lambda} iff conditioning is an equilibrium model.
QbfPolicySet equilibrium_policies(const QuantifiedTheory& theory, const QemOptions& options = {},
                                  const Interp3& conditioning = {});

// Descriptions of every way pair breaks the pair invariants in ctx (ctx's
// remainder being the binder the pair was computed for). Empty when sound.
std::vector<std::string> theta_pair_violations(const ThetaPair& pair,
                                               const EliminationContext& ctx);

}  // namespace qep
