#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qep/errors.hpp"
#include "qep/formula.hpp"
#include "qep/limits.hpp"
#include "qep/semantics.hpp"

namespace qep {

// Binary policies branch over {0, 1} (QBF policies); ternary ones over
// {0, 1/2, 1} (QG3 policies).
enum class Branching { binary, ternary };

// An assignment tree that follows a binder: an existential node fixes its
// atom to one value, a universal node has one subtree per value, and the
// leaf (lambda) closes the binder. Nodes keep the atom they assign so a tree
// can be printed without its binder. Immutable; subtrees are shared.
template <Branching B>
class BasicPolicy {
 public:
  static constexpr std::size_t kArity = B == Branching::binary ? 2 : 3;

  enum class Kind { leaf, exists, forall };

  static constexpr std::span<const Truth> values() {
    if constexpr (B == Branching::binary) {
      return kBinaryValues;
    } else {
      return kTernaryValues;
    }
  }

  static constexpr bool allows(Truth v) { return B == Branching::ternary || is_crisp(v); }

  BasicPolicy() = default;

  static BasicPolicy leaf() { return {}; }

  static BasicPolicy exists(Atom x, Truth v, BasicPolicy sub) {
    if (!allows(v)) throw std::invalid_argument("binary policies cannot assign 1/2");
    return BasicPolicy(std::make_shared<const Node>(
        Node{Kind::exists, std::move(x), v, {std::move(sub)}}));
  }

  // One subtree per element of values(), in that order.
  static BasicPolicy forall(Atom x, std::vector<BasicPolicy> branches) {
    if (branches.size() != kArity) {
      throw std::invalid_argument("universal node needs one subtree per truth value");
    }
    return BasicPolicy(std::make_shared<const Node>(
        Node{Kind::forall, std::move(x), Truth::zero, std::move(branches)}));
  }

  static BasicPolicy forall(Atom x, BasicPolicy on0, BasicPolicy on1)
    requires(B == Branching::binary)
  {
    return forall(std::move(x), std::vector<BasicPolicy>{std::move(on0), std::move(on1)});
  }

  static BasicPolicy forall(Atom x, BasicPolicy on0, BasicPolicy on_half, BasicPolicy on1)
    requires(B == Branching::ternary)
  {
    return forall(std::move(x),
                  std::vector<BasicPolicy>{std::move(on0), std::move(on_half), std::move(on1)});
  }

  Kind kind() const { return node_ ? node_->kind : Kind::leaf; }
  bool is_leaf() const { return !node_; }

  const Atom& atom() const { return checked().atom; }
  // Value chosen by an existential node.
  Truth value() const {
    if (kind() != Kind::exists) throw std::logic_error("not an existential node");
    return node_->value;
  }
  // Subtree of an existential node.
  const BasicPolicy& sub() const {
    if (kind() != Kind::exists) throw std::logic_error("not an existential node");
    return node_->children.front();
  }
  // Subtrees of a universal node, in values() order.
  std::span<const BasicPolicy> branches() const {
    if (kind() != Kind::forall) throw std::logic_error("not a universal node");
    return node_->children;
  }
  // Subtree of a universal node for value v; nullptr if v is not a branch.
  const BasicPolicy* branch(Truth v) const {
    auto vals = values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] == v) return &branches()[i];
    }
    return nullptr;
  }

  friend bool operator==(const BasicPolicy& a, const BasicPolicy& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // Lexicographic over a preorder walk: leaf < exists < forall, then atom,
  // then chosen value, then subtrees left to right.
  friend std::strong_ordering operator<=>(const BasicPolicy& a, const BasicPolicy& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is_leaf()) return std::strong_ordering::equal;
    if (auto c = a.node_->atom <=> b.node_->atom; c != 0) return c;
    if (auto c = a.node_->value <=> b.node_->value; c != 0) return c;
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
      if (auto c = ca[i] <=> cb[i]; c != 0) return c;
    }
    return ca.size() <=> cb.size();
  }

 private:
  struct Node {
    Kind kind;
    Atom atom;
    Truth value;
    std::vector<BasicPolicy> children;
  };

  explicit BasicPolicy(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& checked() const {
    if (!node_) throw std::logic_error("lambda has no atom");
    return *node_;
  }

  std::shared_ptr<const Node> node_;
};

using QbfPolicy = BasicPolicy<Branching::binary>;
using Qg3Policy = BasicPolicy<Branching::ternary>;
using QbfPolicySet = std::set<QbfPolicy>;

// True iff the tree's node sequence mirrors the binder: same atoms, same
// quantifiers, leaves exactly at the end of the binder.
template <Branching B>
bool conforms(const BasicPolicy<B>& policy, const Binder& binder);

// <m, policy> |= binder matrix, with binary branching and classical
// evaluation at the leaves. m must be crisp. Throws PolicyShapeError when the
// policy does not conform to the binder.
bool sat_classical(const Interp3& m, const QbfPolicy& policy, const Binder& binder,
                   const Theory& matrix);

// Ternary branching, G3 evaluation at the leaves.
bool sat_qg3(const Interp3& m, const Qg3Policy& policy, const Binder& binder,
             const Theory& matrix);

// Binary branching, but the leaves are evaluated in G3 under the full,
// possibly non-crisp, m.
bool sat_mixed(const Interp3& m, const QbfPolicy& policy, const Binder& binder,
               const Theory& matrix);

// Interpretations reachable through the policy: every leaf contributes m
// extended with the assignments on its root path. Universal nodes only
// contribute the values they branch on.
template <Branching B>
InterpSet members(const BasicPolicy<B>& policy, const Binder& binder, const Interp3& m);

// Whether m1 follows a root-to-leaf path of the policy on the binder's atoms.
template <Branching B>
bool is_member(const Interp3& m1, const BasicPolicy<B>& policy, const Binder& binder);

// Visits every policy conforming to the binder, in ascending order, until
// visit returns false. Returns false iff stopped early. Throws CapExceeded
// when the binder is longer than limits.binder.
template <Branching B>
bool for_each_policy(const Binder& binder,
                     const std::function<bool(const BasicPolicy<B>&)>& visit,
                     const Limits& limits = {});

template <Branching B>
std::vector<BasicPolicy<B>> enumerate_policies(const Binder& binder, const Limits& limits = {});

// Size of the policy universe: an existential entry multiplies by the
// number of values, a universal one raises to that power. nullopt when the
// count does not fit in 64 bits.
std::optional<std::uint64_t> policy_count(const Binder& binder, Branching branching);

extern template bool conforms(const QbfPolicy&, const Binder&);
extern template bool conforms(const Qg3Policy&, const Binder&);
extern template InterpSet members(const QbfPolicy&, const Binder&, const Interp3&);
extern template InterpSet members(const Qg3Policy&, const Binder&, const Interp3&);
extern template bool is_member(const Interp3&, const QbfPolicy&, const Binder&);
extern template bool is_member(const Interp3&, const Qg3Policy&, const Binder&);
extern template bool for_each_policy(const Binder&,
                                     const std::function<bool(const QbfPolicy&)>&,
                                     const Limits&);
extern template bool for_each_policy(const Binder&,
                                     const std::function<bool(const Qg3Policy&)>&,
                                     const Limits&);
extern template std::vector<QbfPolicy> enumerate_policies(const Binder&, const Limits&);
extern template std::vector<Qg3Policy> enumerate_policies(const Binder&, const Limits&);

}  // namespace qep
