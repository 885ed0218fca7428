#include "qep/policy.hpp"

namespace qep {
namespace {

template <Branching B>
using Kind = typename BasicPolicy<B>::Kind;

template <Branching B>
bool conforms_from(const BasicPolicy<B>& p, const Binder& binder, std::size_t i) {
  if (i == binder.size()) return p.is_leaf();
  if (p.is_leaf()) return false;
  const auto& [q, x] = binder[i];
  if (p.atom() != x) return false;
  if (q == Quantifier::exists) {
    return p.kind() == Kind<B>::exists && conforms_from(p.sub(), binder, i + 1);
  }
  if (p.kind() != Kind<B>::forall) return false;
  for (const auto& sub : p.branches()) {
    if (!conforms_from(sub, binder, i + 1)) return false;
  }
  return true;
}

template <Branching B, typename Leaf>
bool satisfies(const Interp3& m, const BasicPolicy<B>& p, const Binder& binder, std::size_t i,
               const Leaf& leaf) {
  if (i == binder.size()) return leaf(m);
  const Atom& x = binder[i].atom;
  if (p.kind() == Kind<B>::exists) {
    return satisfies(m.updated(x, p.value()), p.sub(), binder, i + 1, leaf);
  }
  auto values = BasicPolicy<B>::values();
  auto branches = p.branches();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!satisfies(m.updated(x, values[k]), branches[k], binder, i + 1, leaf)) return false;
  }
  return true;
}

template <Branching B>
void require_conforming(const BasicPolicy<B>& p, const Binder& binder) {
  if (!conforms(p, binder)) {
    throw PolicyShapeError("policy does not conform to binder '" + to_string(binder) + "'");
  }
}

template <Branching B>
void collect_members(const BasicPolicy<B>& p, const Binder& binder, std::size_t i,
                     const Interp3& m, InterpSet& out) {
  if (i == binder.size()) {
    out.insert(m);
    return;
  }
  const Atom& x = binder[i].atom;
  if (p.kind() == Kind<B>::exists) {
    collect_members(p.sub(), binder, i + 1, m.updated(x, p.value()), out);
    return;
  }
  auto values = BasicPolicy<B>::values();
  auto branches = p.branches();
  for (std::size_t k = 0; k < values.size(); ++k) {
    collect_members(branches[k], binder, i + 1, m.updated(x, values[k]), out);
  }
}

template <Branching B>
bool member_from(const Interp3& m1, const BasicPolicy<B>& p, const Binder& binder,
                 std::size_t i) {
  if (i == binder.size()) return true;
  auto v = m1.get(binder[i].atom);
  if (!v) return false;
  if (p.kind() == Kind<B>::exists) {
    return *v == p.value() && member_from(m1, p.sub(), binder, i + 1);
  }
  const BasicPolicy<B>* next = p.branch(*v);
  return next != nullptr && member_from(m1, *next, binder, i + 1);
}

template <Branching B>
using Visitor = std::function<bool(const BasicPolicy<B>&)>;

// Ascending order: an existential entry varies its value slowest, a
// universal entry fills its branches left to right, each branch ranging over
// the (already ascending) policies of the rest of the binder.
template <Branching B>
bool enumerate_from(const Binder& binder, std::size_t i, const Visitor<B>& visit) {
  using Policy = BasicPolicy<B>;
  if (i == binder.size()) return visit(Policy::leaf());
  const auto& [q, x] = binder[i];
  if (q == Quantifier::exists) {
    for (Truth v : Policy::values()) {
      bool go_on = enumerate_from<B>(binder, i + 1, [&](const Policy& sub) {
        return visit(Policy::exists(x, v, sub));
      });
      if (!go_on) return false;
    }
    return true;
  }
  std::vector<Policy> slots(Policy::kArity);
  auto fill = [&](auto& self, std::size_t slot) -> bool {
    if (slot == Policy::kArity) return visit(Policy::forall(x, slots));
    return enumerate_from<B>(binder, i + 1, [&](const Policy& sub) {
      slots[slot] = sub;
      return self(self, slot + 1);
    });
  };
  return fill(fill, 0);
}

}  // namespace

template <Branching B>
bool conforms(const BasicPolicy<B>& policy, const Binder& binder) {
  return conforms_from(policy, binder, 0);
}

bool sat_classical(const Interp3& m, const QbfPolicy& policy, const Binder& binder,
                   const Theory& matrix) {
  require_conforming(policy, binder);
  for (const auto& [a, v] : m) {
    if (!is_crisp(v)) throw NonCrispError(a.name());
  }
  return satisfies(m, policy, binder, 0, [&](const Interp3& leaf) {
    return eval_theory(leaf, matrix, EvalMode::classical) == Truth::one;
  });
}

bool sat_qg3(const Interp3& m, const Qg3Policy& policy, const Binder& binder,
             const Theory& matrix) {
  require_conforming(policy, binder);
  return satisfies(m, policy, binder, 0,
                   [&](const Interp3& leaf) { return is_model(leaf, matrix); });
}

bool sat_mixed(const Interp3& m, const QbfPolicy& policy, const Binder& binder,
               const Theory& matrix) {
  require_conforming(policy, binder);
  return satisfies(m, policy, binder, 0,
                   [&](const Interp3& leaf) { return is_model(leaf, matrix); });
}

template <Branching B>
InterpSet members(const BasicPolicy<B>& policy, const Binder& binder, const Interp3& m) {
  require_conforming(policy, binder);
  InterpSet out;
  collect_members(policy, binder, 0, m, out);
  return out;
}

template <Branching B>
bool is_member(const Interp3& m1, const BasicPolicy<B>& policy, const Binder& binder) {
  require_conforming(policy, binder);
  return member_from(m1, policy, binder, 0);
}

template <Branching B>
bool for_each_policy(const Binder& binder, const std::function<bool(const BasicPolicy<B>&)>& visit,
                     const Limits& limits) {
  if (binder.size() > limits.binder) {
    throw CapExceeded("binder length", binder.size(), limits.binder);
  }
  return enumerate_from<B>(binder, 0, visit);
}

template <Branching B>
std::vector<BasicPolicy<B>> enumerate_policies(const Binder& binder, const Limits& limits) {
  std::vector<BasicPolicy<B>> out;
  for_each_policy<B>(
      binder,
      [&](const BasicPolicy<B>& p) {
        out.push_back(p);
        return true;
      },
      limits);
  return out;
}

std::optional<std::uint64_t> policy_count(const Binder& binder, Branching branching) {
  const std::uint64_t arity = branching == Branching::binary ? 2 : 3;
  std::uint64_t count = 1;
  for (std::size_t i = binder.size(); i-- > 0;) {
    if (binder[i].quantifier == Quantifier::exists) {
      if (__builtin_mul_overflow(count, arity, &count)) return std::nullopt;
    } else {
      std::uint64_t power = 1;
      for (std::uint64_t k = 0; k < arity; ++k) {
        if (__builtin_mul_overflow(power, count, &power)) return std::nullopt;
      }
      count = power;
    }
  }
  return count;
}

template bool conforms(const QbfPolicy&, const Binder&);
template bool conforms(const Qg3Policy&, const Binder&);
template InterpSet members(const QbfPolicy&, const Binder&, const Interp3&);
template InterpSet members(const Qg3Policy&, const Binder&, const Interp3&);
template bool is_member(const Interp3&, const QbfPolicy&, const Binder&);
template bool is_member(const Interp3&, const Qg3Policy&, const Binder&);
template bool for_each_policy(const Binder&, const std::function<bool(const QbfPolicy&)>&,
                              const Limits&);
template bool for_each_policy(const Binder&, const std::function<bool(const Qg3Policy&)>&,
                              const Limits&);
template std::vector<QbfPolicy> enumerate_policies(const Binder&, const Limits&);
template std::vector<Qg3Policy> enumerate_policies(const Binder&, const Limits&);

}  // namespace qep
