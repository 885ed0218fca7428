#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qep {

// A propositional variable. Names follow [a-z][A-Za-z0-9_]*.
class Atom {
 public:
  explicit Atom(std::string name);

  static bool is_valid_name(std::string_view name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

using AtomSet = std::set<Atom>;

enum class Connective { bot, var, conj, disj, implies };

// Immutable propositional formula over bot, atoms, conjunction, disjunction
// and implication. Negation and truth are derived: ~f is f -> bot and true
// is bot -> bot. Subtrees are shared, so copies are cheap.
class Formula {
 public:
  static Formula bot();
  static Formula top();
  static Formula var(Atom atom);
  static Formula var(std::string_view name);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula implies(Formula left, Formula right);
  static Formula negation(Formula operand);

  Connective kind() const;
  // Only valid for Connective::var.
  const Atom& atom() const;
  // Only valid for the binary connectives.
  const Formula& left() const;
  const Formula& right() const;

  // f -> bot
  bool is_negation() const;
  // bot -> bot
  bool is_top() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A theory is a finite list of formulas; it is satisfied to the degree of
// its weakest member.
using Theory = std::vector<Formula>;

enum class Quantifier { exists, forall };

struct BinderEntry {
  Quantifier quantifier;
  Atom atom;

  friend bool operator==(const BinderEntry&, const BinderEntry&) = default;
};

// The quantifier prefix Q1 x1 ... Qn xn. No atom is bound twice.
class Binder {
 public:
  Binder() = default;
  Binder(std::initializer_list<BinderEntry> entries);

  // Throws std::invalid_argument when the atom is already bound.
  void push_back(Quantifier quantifier, Atom atom);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const BinderEntry& front() const { return entries_.front(); }
  const BinderEntry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // The binder without its first entry.
  Binder tail() const;
  bool binds(const Atom& atom) const;
  AtomSet atoms() const;

  friend bool operator==(const Binder&, const Binder&) = default;

 private:
  std::vector<BinderEntry> entries_;
};

Binder exists(std::string_view name);
Binder forall(std::string_view name);
// Concatenation; throws std::invalid_argument on a repeated atom.
Binder operator+(const Binder& lhs, const Binder& rhs);

struct QuantifiedTheory {
  Binder binder;
  Theory matrix;
};

AtomSet variables(const Formula& formula);
AtomSet variables(const Theory& theory);
// Atoms of the matrix, plus the binder's when include_binder is set.
AtomSet variables(const QuantifiedTheory& theory, bool include_binder = false);
// Matrix atoms that the binder does not quantify.
AtomSet free_variables(const QuantifiedTheory& theory);

// Minimal-parenthesis rendering in the input syntax; parse_formula inverts it.
std::string to_string(const Formula& formula);
std::string to_string(Quantifier quantifier);
std::string to_string(const Binder& binder);
// Whole theory in the input syntax, one formula per line.
std::string to_string(const QuantifiedTheory& theory);

std::ostream& operator<<(std::ostream& os, const Atom& atom);
std::ostream& operator<<(std::ostream& os, const Formula& formula);
std::ostream& operator<<(std::ostream& os, const Binder& binder);

}  // namespace qep
