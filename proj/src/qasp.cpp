#include "qep/qasp.hpp"

#include <algorithm>
#include <iterator>
#include <type_traits>

#include "qep/render.hpp"
#include "qep/semantics.hpp"

namespace qep {

std::string_view to_string(SemanticsKind kind) {
  return kind == SemanticsKind::fandinno ? "fandinno" : "stephan";
}

Formula positive_augmentation(const Atom& x, SemanticsKind kind) {
  Formula atom = Formula::var(x);
  if (kind == SemanticsKind::stephan) return atom;
  return Formula::negation(Formula::negation(atom));
}

Formula negative_augmentation(const Atom& x) { return Formula::negation(Formula::var(x)); }

Theory augment(const QuantifiedTheory& theory, const Interp3& choice, SemanticsKind kind) {
  Theory out = theory.matrix;
  for (const auto& [q, x] : theory.binder) {
    Truth v = choice.at(x);
    if (!is_crisp(v)) throw NonCrispError(x.name());
    out.push_back(v == Truth::one ? positive_augmentation(x, kind) : negative_augmentation(x));
  }
  return out;
}

AtomSet answer_set_domain(const QuantifiedTheory& theory) { return variables(theory, true); }

namespace {

class Recursion {
 public:
  Recursion(const QuantifiedTheory& theory, SemanticsKind kind, const Limits& limits)
      : theory_(theory), kind_(kind), limits_(limits), domain_(answer_set_domain(theory)) {
    if (theory.binder.size() > limits.binder) {
      throw CapExceeded("binder length", theory.binder.size(), limits.binder);
    }
    if (domain_.size() > limits.model_atoms) {
      throw CapExceeded("answer set domain", domain_.size(), limits.model_atoms);
    }
  }

  template <typename Body>
  static decltype(auto) with(Theory& gamma, Formula extra, const Body& body) {
    gamma.push_back(std::move(extra));
    std::invoke_result_t<const Body&> result = body();
    gamma.pop_back();
    return result;
  }

  bool satisfiable(std::size_t i, Theory& gamma) {
    if (i == theory_.binder.size()) return has_answer_set(gamma);
    const auto& [q, x] = theory_.binder[i];
    bool pos = with(gamma, positive_augmentation(x, kind_), [&] { return satisfiable(i + 1, gamma); });
    if (q == Quantifier::exists && pos) return true;
    if (q == Quantifier::forall && !pos) return false;
    return with(gamma, negative_augmentation(x), [&] { return satisfiable(i + 1, gamma); });
  }

  bool accepts(const QbfPolicy& p, std::size_t i, Theory& gamma) {
    if (i == theory_.binder.size()) return has_answer_set(gamma);
    const Atom& x = theory_.binder[i].atom;
    if (p.kind() == QbfPolicy::Kind::exists) {
      return with(gamma, augmentation(x, p.value()), [&] { return accepts(p.sub(), i + 1, gamma); });
    }
    auto branches = p.branches();
    for (std::size_t k = 0; k < branches.size(); ++k) {
      bool ok = with(gamma, augmentation(x, QbfPolicy::values()[k]),
                     [&] { return accepts(branches[k], i + 1, gamma); });
      if (!ok) return false;
    }
    return true;
  }

  // Accepted sub-policies of the binder suffix starting at i.
  QbfPolicySet accepted(std::size_t i, Theory& gamma) {
    if (i == theory_.binder.size()) {
      if (has_answer_set(gamma)) return {QbfPolicy::leaf()};
      return {};
    }
    const auto& [q, x] = theory_.binder[i];
    QbfPolicySet on0 = with(gamma, augmentation(x, Truth::zero), [&] { return accepted(i + 1, gamma); });
    QbfPolicySet on1 = with(gamma, augmentation(x, Truth::one), [&] { return accepted(i + 1, gamma); });
    QbfPolicySet out;
    if (q == Quantifier::exists) {
      for (const auto& sub : on0) out.insert(QbfPolicy::exists(x, Truth::zero, sub));
      for (const auto& sub : on1) out.insert(QbfPolicy::exists(x, Truth::one, sub));
    } else {
      for (const auto& a : on0) {
        for (const auto& b : on1) out.insert(QbfPolicy::forall(x, a, b));
      }
    }
    return out;
  }

 private:
  Formula augmentation(const Atom& x, Truth v) const {
    return v == Truth::one ? positive_augmentation(x, kind_) : negative_augmentation(x);
  }

  bool has_answer_set(const Theory& gamma) const {
    return !equilibrium_models(gamma, domain_, limits_).empty();
  }

  const QuantifiedTheory& theory_;
  SemanticsKind kind_;
  const Limits& limits_;
  AtomSet domain_;
};

}  // namespace

bool sat_qasp(const QuantifiedTheory& theory, SemanticsKind kind, const Limits& limits) {
  Theory gamma = theory.matrix;
  return Recursion(theory, kind, limits).satisfiable(0, gamma);
}

bool accepts(const QbfPolicy& policy, const QuantifiedTheory& theory, SemanticsKind kind,
             const Limits& limits) {
  if (!conforms(policy, theory.binder)) {
    throw PolicyShapeError("policy does not conform to binder '" + to_string(theory.binder) + "'");
  }
  Theory gamma = theory.matrix;
  return Recursion(theory, kind, limits).accepts(policy, 0, gamma);
}

QbfPolicySet accepted_policies(const QuantifiedTheory& theory, SemanticsKind kind,
                               const Limits& limits) {
  Theory gamma = theory.matrix;
  return Recursion(theory, kind, limits).accepted(0, gamma);
}

SemanticsReport compare_semantics(const QuantifiedTheory& theory, const Limits& limits) {
  SemanticsReport report;
  report.fandinno_sat = sat_qasp(theory, SemanticsKind::fandinno, limits);
  report.stephan_sat = sat_qasp(theory, SemanticsKind::stephan, limits);
  report.fandinno_policies = accepted_policies(theory, SemanticsKind::fandinno, limits);
  report.stephan_policies = accepted_policies(theory, SemanticsKind::stephan, limits);
  std::set_difference(report.fandinno_policies.begin(), report.fandinno_policies.end(),
                      report.stephan_policies.begin(), report.stephan_policies.end(),
                      std::inserter(report.only_fandinno, report.only_fandinno.end()));
  std::set_difference(report.stephan_policies.begin(), report.stephan_policies.end(),
                      report.fandinno_policies.begin(), report.fandinno_policies.end(),
                      std::inserter(report.only_stephan, report.only_stephan.end()));
  return report;
}

nlohmann::ordered_json to_json(const SemanticsReport& report) {
  auto list = [](const QbfPolicySet& policies) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& p : policies) out.push_back(to_json(p));
    return out;
  };
  nlohmann::ordered_json j;
  j["fandinno"] = {{"sat", report.fandinno_sat}, {"policies", list(report.fandinno_policies)}};
  j["stephan"] = {{"sat", report.stephan_sat}, {"policies", list(report.stephan_policies)}};
  j["only_stephan"] = list(report.only_stephan);
  j["only_fandinno"] = list(report.only_fandinno);
  return j;
}

}  // namespace qep
