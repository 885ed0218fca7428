#include "qep/qem.hpp"

#include <stdexcept>

namespace qep {
namespace {

Truth eval_at(const Theory& matrix, const Interp3& m, const Atom& x, Truth v) {
  return eval_theory(m.updated(x, v), matrix);
}

InterpSet minimal_elements(const InterpSet& models) {
  InterpSet out;
  for (const auto& m : models) {
    bool dominated = false;
    for (const auto& other : models) {
      if (precedes(other, m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(m);
  }
  return out;
}

ThetaPair merge(Quantifier q, const Atom& x, const ThetaPair& p0, const ThetaPair& p_half,
                const ThetaPair& p1, const EliminationContext& ctx) {
  const Binder& rest = ctx.remainder;
  const Interp3 on_half = ctx.conditioning.updated(x, Truth::half);
  const Interp3 on1 = ctx.conditioning.updated(x, Truth::one);

  // Every m1 reachable through pi with x=1 must stay minimal against the
  // x=1/2 side.
  auto survives = [&](const QbfPolicy& pi) {
    for (const auto& m1 : members(pi, rest, on1)) {
      for (const auto& lower : p_half.non_crisp_models) {
        if (precedes(lower, m1)) return false;
      }
      for (const auto& other : p_half.policies) {
        if (is_member(m1, other, rest)) return false;
      }
    }
    return true;
  };
  QbfPolicySet kept;
  for (const auto& pi : p1.policies) {
    if (survives(pi)) kept.insert(pi);
  }

  ThetaPair out;
  if (q == Quantifier::exists) {
    for (const auto& pi : p0.policies) out.policies.insert(QbfPolicy::exists(x, Truth::zero, pi));
    for (const auto& pi : kept) out.policies.insert(QbfPolicy::exists(x, Truth::one, pi));
  } else {
    for (const auto& pi0 : p0.policies) {
      for (const auto& pi1 : kept) out.policies.insert(QbfPolicy::forall(x, pi0, pi1));
    }
  }

  for (const auto& pi : p_half.policies) out.non_crisp_models.merge(members(pi, rest, on_half));
  for (const auto* p : {&p0, &p_half, &p1}) {
    out.non_crisp_models.insert(p->non_crisp_models.begin(), p->non_crisp_models.end());
  }
  return out;
}

class Eliminator {
 public:
  Eliminator(const Theory& matrix, const QemOptions& options)
      : matrix_(matrix), options_(options) {}

  ThetaPair run(const Binder& binder, const Interp3& m) {
    const auto& [q, x] = binder.front();
    ThetaPair out;
    Binder rest = binder.tail();
    if (rest.empty()) {
      out = q == Quantifier::exists ? qem_base_exists(x, matrix_, m)
                                    : qem_base_forall(x, matrix_, m);
    } else {
      ThetaPair p0 = run(rest, m.updated(x, Truth::zero));
      ThetaPair p_half = run(rest, m.updated(x, Truth::half));
      ThetaPair p1 = run(rest, m.updated(x, Truth::one));
      EliminationContext ctx{rest, matrix_, m};
      out = q == Quantifier::exists ? mc_exists(x, p0, p_half, p1, ctx)
                                    : mc_forall(x, p0, p_half, p1, ctx);
    }
    if (options_.non_crisp_policies == NonCrispPolicies::fold) {
      out = fold_non_crisp(std::move(out), binder, m);
    }
    if (options_.prune_hc) out.non_crisp_models = minimal_elements(out.non_crisp_models);
    if (options_.check_invariants) {
      auto problems = theta_pair_violations(out, EliminationContext{binder, matrix_, m});
      if (!problems.empty()) throw std::logic_error("QEM invariant broken: " + problems.front());
    }
    if (options_.trace) {
      options_.trace("QEM " + to_string(binder) + " | m={" + to_string(m) + "} -> |T|=" +
                     std::to_string(out.policies.size()) +
                     " |HC|=" + std::to_string(out.non_crisp_models.size()));
    }
    return out;
  }

 private:
  const Theory& matrix_;
  const QemOptions& options_;
};

}  // namespace

ThetaPair qem_base_exists(const Atom& x, const Theory& matrix, const Interp3& m) {
  ThetaPair out;
  Truth on_half = eval_at(matrix, m, x, Truth::half);
  if (on_half == Truth::one) out.non_crisp_models.insert(m.updated(x, Truth::half));
  if (eval_at(matrix, m, x, Truth::zero) == Truth::one) {
    out.policies.insert(QbfPolicy::exists(x, Truth::zero, QbfPolicy::leaf()));
  }
  if (on_half <= Truth::half && eval_at(matrix, m, x, Truth::one) == Truth::one) {
    out.policies.insert(QbfPolicy::exists(x, Truth::one, QbfPolicy::leaf()));
  }
  return out;
}

ThetaPair qem_base_forall(const Atom& x, const Theory& matrix, const Interp3& m) {
  ThetaPair out;
  Truth on0 = eval_at(matrix, m, x, Truth::zero);
  Truth on_half = eval_at(matrix, m, x, Truth::half);
  Truth on1 = eval_at(matrix, m, x, Truth::one);
  if (on0 == Truth::one && on_half <= Truth::half && on1 == Truth::one) {
    out.policies.insert(QbfPolicy::forall(x, QbfPolicy::leaf(), QbfPolicy::leaf()));
    return out;
  }
  if (on_half == Truth::one) out.non_crisp_models.insert(m.updated(x, Truth::half));
  for (auto [v, value] : {std::pair{Truth::zero, on0}, std::pair{Truth::one, on1}}) {
    Interp3 candidate = m.updated(x, v);
    if (value == Truth::one && !candidate.is_crisp()) out.non_crisp_models.insert(candidate);
  }
  return out;
}

ThetaPair mc_exists(const Atom& x, const ThetaPair& p0, const ThetaPair& p_half,
                    const ThetaPair& p1, const EliminationContext& ctx) {
  return merge(Quantifier::exists, x, p0, p_half, p1, ctx);
}

ThetaPair mc_forall(const Atom& x, const ThetaPair& p0, const ThetaPair& p_half,
                    const ThetaPair& p1, const EliminationContext& ctx) {
  return merge(Quantifier::forall, x, p0, p_half, p1, ctx);
}

ThetaPair fold_non_crisp(ThetaPair pair, const Binder& binder, const Interp3& conditioning) {
  if (conditioning.is_crisp()) return pair;
  for (const auto& pi : pair.policies) pair.non_crisp_models.merge(members(pi, binder, conditioning));
  pair.policies.clear();
  return pair;
}

ThetaPair qem(const Binder& binder, const Theory& matrix, const Interp3& m,
              const QemOptions& options) {
  if (binder.empty()) throw std::invalid_argument("QEM needs a non-empty binder");
  if (binder.size() > options.limits.binder) {
    throw CapExceeded("binder length", binder.size(), options.limits.binder);
  }
  for (const auto& e : binder) {
    if (m.defines(e.atom)) {
      throw std::invalid_argument("conditioning interpretation assigns bound atom '" +
                                  e.atom.name() + "'");
    }
  }
  for (const auto& a : variables(matrix)) {
    if (!binder.binds(a) && !m.defines(a)) throw UndefinedAtomError(a.name());
  }
  return Eliminator(matrix, options).run(binder, m);
}

QbfPolicySet equilibrium_policies(const QuantifiedTheory& theory, const QemOptions& options,
                                  const Interp3& conditioning) {
  if (theory.binder.empty()) {
    for (const auto& a : variables(theory.matrix)) {
      if (!conditioning.defines(a)) throw UndefinedAtomError(a.name());
    }
    if (is_equilibrium_model(conditioning, theory.matrix)) return {QbfPolicy::leaf()};
    return {};
  }
  return qem(theory.binder, theory.matrix, conditioning, options).policies;
}

std::vector<std::string> theta_pair_violations(const ThetaPair& pair,
                                               const EliminationContext& ctx) {
  std::vector<std::string> out;
  const Interp3& m = ctx.conditioning;
  for (const auto& pi : pair.policies) {
    if (!conforms(pi, ctx.remainder)) {
      out.push_back("policy does not conform to '" + to_string(ctx.remainder) + "'");
    } else if (!sat_mixed(m, pi, ctx.remainder, ctx.matrix)) {
      out.push_back("policy leaves a leaf that is not a G3 model under {" + to_string(m) + "}");
    }
  }
  AtomSet domain = m.domain();
  domain.merge(ctx.remainder.atoms());
  for (const auto& model : pair.non_crisp_models) {
    std::string where = "non-crisp part member {" + to_string(model) + "}";
    if (model.is_crisp()) out.push_back(where + " is crisp");
    if (!model.is_total_over(domain) || model.size() != domain.size()) {
      out.push_back(where + " is not total over the conditioning and binder atoms");
      continue;
    }
    if (!is_model(model, ctx.matrix)) out.push_back(where + " is not a G3 model");
    for (const auto& [a, v] : m) {
      if (model.at(a) != v) out.push_back(where + " disagrees with the conditioning on " + a.name());
    }
  }
  return out;
}

}  // namespace qep
