#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qep/errors.hpp"
#include "qep/formula.hpp"
#include "qep/limits.hpp"

namespace qep {

// Truth degrees of Goedel's three-valued logic, ordered 0 < 1/2 < 1.
enum class Truth : std::uint8_t { zero = 0, half = 1, one = 2 };

inline constexpr std::array<Truth, 3> kTernaryValues{Truth::zero, Truth::half, Truth::one};
inline constexpr std::array<Truth, 2> kBinaryValues{Truth::zero, Truth::one};

constexpr bool is_crisp(Truth v) { return v != Truth::half; }

// "0", "1/2", "1"
std::string_view to_string(Truth v);
std::optional<Truth> parse_truth(std::string_view text);

// A partial map from atoms to truth degrees. Classical interpretations are
// the ones whose values are all crisp.
class Interp3 {
 public:
  Interp3() = default;
  Interp3(std::initializer_list<std::pair<const Atom, Truth>> values) : values_(values) {}

  bool defines(const Atom& atom) const { return values_.contains(atom); }
  std::optional<Truth> get(const Atom& atom) const;
  // Throws UndefinedAtomError.
  Truth at(const Atom& atom) const;

  void assign(const Atom& atom, Truth value) { values_[atom] = value; }
  // Copy with atom mapped to value.
  Interp3 updated(const Atom& atom, Truth value) const;

  AtomSet domain() const;
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool is_crisp() const;
  bool is_total_over(const AtomSet& atoms) const;

  friend bool operator==(const Interp3&, const Interp3&) = default;
  friend auto operator<=>(const Interp3&, const Interp3&) = default;

 private:
  std::map<Atom, Truth> values_;
};

using InterpSet = std::set<Interp3>;
using Sigma = AtomSet;

// Sorted "atom=value" list, e.g. "x=1/2, z=0". The empty interpretation
// prints as the empty string.
std::string to_string(const Interp3& m);
// Inverse of to_string; separators may be ',' with optional blanks.
// Throws std::invalid_argument.
Interp3 parse_interpretation(std::string_view text);

Interp3 update(const Interp3& m, const Atom& x, Truth value);

// G3 evaluation. Implication yields 1 when the antecedent is not above the
// consequent and the consequent's value otherwise.
Truth eval3(const Interp3& m, const Formula& f);
// Classical evaluation; throws NonCrispError on a 1/2 atom.
Truth eval2(const Interp3& m, const Formula& f);

enum class EvalMode { classical, g3 };
// Minimum over the members; the empty theory evaluates to 1.
Truth eval_theory(const Interp3& m, const Theory& gamma, EvalMode mode = EvalMode::g3);
inline bool is_model(const Interp3& m, const Theory& gamma) {
  return eval_theory(m, gamma) == Truth::one;
}

// Lifts 1/2 to 1 on the atoms of sigma.
Interp3 crisp(const Interp3& m, const Sigma& sigma);
// Lifts every 1/2.
Interp3 crisp(const Interp3& m);

// How m relates to m2 on sigma. Exactly one outcome holds:
//   equal        pointwise equal on sigma
//   less         m is strictly below m2 (same crisp projection, pointwise <=)
//   greater      m2 is strictly below m
//   incomparable otherwise
enum class Ordering { equal, less, greater, incomparable };
std::string_view to_string(Ordering o);

// Throws UndefinedAtomError if either side misses an atom of sigma.
Ordering cmp(const Interp3& m, const Interp3& m2, const Sigma& sigma);
// Sigma defaults to the union of both domains.
Ordering cmp(const Interp3& m, const Interp3& m2);

// m strictly below m2 over the union of both domains.
inline bool precedes(const Interp3& m, const Interp3& m2) {
  return cmp(m, m2) == Ordering::less;
}

// Calls visit(m') for every extension of base that assigns each atom of
// atoms a value from values. Atoms vary in order, the last one fastest.
template <typename Visit>
void for_each_assignment(std::span<const Atom> atoms, std::span<const Truth> values,
                         const Interp3& base, Visit&& visit) {
  Interp3 current = base;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == atoms.size()) {
      visit(static_cast<const Interp3&>(current));
      return;
    }
    for (Truth v : values) {
      current.assign(atoms[i], v);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

// All crisp m total over domain such that m models gamma and no m' total over
// domain with m' strictly below m models gamma. Found by enumerating all
// 3^|domain| interpretations. Throws CapExceeded past limits.model_atoms and
// std::invalid_argument when domain misses an atom of gamma.
InterpSet equilibrium_models(const Theory& gamma, const AtomSet& domain,
                             const Limits& limits = {});

// Membership test for equilibrium_models(gamma, domain of m) that only
// visits the interpretations below m.
bool is_equilibrium_model(const Interp3& m, const Theory& gamma);

// Quantified G3: forall is the minimum and exists the maximum over the three
// updates of the bound atom; the empty binder falls back to eval3.
Truth eval_qg3(const Interp3& m, const Binder& binder, const Formula& f);
Truth eval_qg3(const Interp3& m, const Binder& binder, const Theory& gamma);

}  // namespace qep
