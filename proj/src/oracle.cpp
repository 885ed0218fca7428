#include "qep/oracle.hpp"

#include <functional>

namespace qep {
namespace {

AtomSet answer_domain(const Binder& binder, const Theory& matrix) {
  AtomSet domain = variables(matrix);
  domain.merge(binder.atoms());
  return domain;
}

bool all_leaves_in(const InterpSet& leaves, const InterpSet& models) {
  for (const auto& leaf : leaves) {
    if (!models.contains(leaf)) return false;
  }
  return true;
}

}  // namespace

bool is_equilibrium_configuration(const Interp3& m, const QbfPolicy& policy,
                                  const Binder& binder, const Theory& matrix) {
  if (!conforms(policy, binder)) throw PolicyShapeError("policy does not follow the binder");
  AtomSet domain = answer_domain(binder, matrix);
  for (const auto& leaf : members(policy, binder, m)) {
    if (!leaf.is_total_over(domain) || leaf.size() != domain.size()) return false;
    if (!is_equilibrium_model(leaf, matrix)) return false;
  }
  return true;
}

OracleResult brute_equilibrium_policies(const Binder& binder, const Theory& matrix,
                                        const Limits& limits) {
  if (binder.size() > limits.oracle_binder) {
    throw CapExceeded("oracle binder length", binder.size(), limits.oracle_binder);
  }
  AtomSet domain = answer_domain(binder, matrix);
  for (const auto& a : variables(matrix)) {
    if (!binder.binds(a)) throw UndefinedAtomError(a.name());
  }
  InterpSet models = equilibrium_models(matrix, domain, limits);

  OracleResult out;
  Limits enumeration = limits;
  enumeration.binder = limits.oracle_binder;
  for_each_policy<Branching::binary>(
      binder,
      [&](const QbfPolicy& pi) {
        ++out.inspected;
        InterpSet leaves = members(pi, binder, Interp3{});
        if (all_leaves_in(leaves, models)) {
          out.policies.insert(pi);
          out.witnesses.emplace(pi, std::move(leaves));
        }
        return true;
      },
      enumeration);
  return out;
}

}  // namespace qep
