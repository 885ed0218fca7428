#pragma once

#include <string_view>

#include "json.hpp"
#include "qep/formula.hpp"
#include "qep/limits.hpp"
#include "qep/policy.hpp"

namespace qep {

// How a quantified atom is forced true: fandinno adds ~~x, stephan adds the
// fact x. Both force falsity with ~x.
enum class SemanticsKind { fandinno, stephan };

std::string_view to_string(SemanticsKind kind);

Formula positive_augmentation(const Atom& x, SemanticsKind kind);
Formula negative_augmentation(const Atom& x);

// The matrix followed by one augmentation per binder atom, in binder order,
// chosen by the crisp value choice assigns to that atom.
Theory augment(const QuantifiedTheory& theory, const Interp3& choice, SemanticsKind kind);

// Atoms the answer sets range over: the matrix atoms plus the binder atoms.
AtomSet answer_set_domain(const QuantifiedTheory& theory);

// Satisfiability by recursion over the binder: an existential atom needs one
// augmented remainder to be satisfiable, a universal atom both; the fully
// augmented theory is satisfiable iff it has an equilibrium model.
bool sat_qasp(const QuantifiedTheory& theory, SemanticsKind kind, const Limits& limits = {});

// Whether every path the policy prescribes ends in a satisfiable augmented
// theory. Throws PolicyShapeError for non-conforming policies.
bool accepts(const QbfPolicy& policy, const QuantifiedTheory& theory, SemanticsKind kind,
             const Limits& limits = {});

// All conforming policies that accepts() holds for.
QbfPolicySet accepted_policies(const QuantifiedTheory& theory, SemanticsKind kind,
                               const Limits& limits = {});

struct SemanticsReport {
  bool fandinno_sat = false;
  bool stephan_sat = false;
  QbfPolicySet fandinno_policies;
  QbfPolicySet stephan_policies;
  QbfPolicySet only_fandinno;
  QbfPolicySet only_stephan;

  bool diverges() const {
    return fandinno_sat != stephan_sat || !only_fandinno.empty() || !only_stephan.empty();
  }
};

SemanticsReport compare_semantics(const QuantifiedTheory& theory, const Limits& limits = {});

// {"fandinno":{"sat":..,"policies":[..]},"stephan":{..},"only_stephan":[..],"only_fandinno":[..]}
nlohmann::ordered_json to_json(const SemanticsReport& report);

}  // namespace qep
