#include "qep/formula.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qep {

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw std::invalid_argument("invalid atom name '" + name_ + "'");
  }
}

bool Atom::is_valid_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

struct Formula::Node {
  Connective kind;
  std::optional<Atom> atom;
  Formula left{nullptr};
  Formula right{nullptr};
};

Formula Formula::bot() {
  static const Formula kBot(std::make_shared<const Node>(Node{Connective::bot, {}}));
  return kBot;
}

Formula Formula::top() { return implies(bot(), bot()); }

Formula Formula::var(Atom atom) {
  return Formula(std::make_shared<const Node>(Node{Connective::var, std::move(atom)}));
}

Formula Formula::var(std::string_view name) { return var(Atom(std::string(name))); }

Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::conj, {}, std::move(left), std::move(right)}));
}

Formula Formula::disj(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::disj, {}, std::move(left), std::move(right)}));
}

Formula Formula::implies(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::implies, {}, std::move(left), std::move(right)}));
}

Formula Formula::negation(Formula operand) { return implies(std::move(operand), bot()); }

Connective Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (node_->kind != Connective::var) throw std::logic_error("formula is not an atom");
  return *node_->atom;
}

const Formula& Formula::left() const {
  if (!node_->left.node_) throw std::logic_error("formula has no operands");
  return node_->left;
}

const Formula& Formula::right() const {
  if (!node_->right.node_) throw std::logic_error("formula has no operands");
  return node_->right;
}

bool Formula::is_negation() const {
  return kind() == Connective::implies && right().kind() == Connective::bot;
}

bool Formula::is_top() const { return is_negation() && left().kind() == Connective::bot; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::bot:
      return true;
    case Connective::var:
      return a.atom() == b.atom();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

Binder::Binder(std::initializer_list<BinderEntry> entries) {
  for (const auto& e : entries) push_back(e.quantifier, e.atom);
}

void Binder::push_back(Quantifier quantifier, Atom atom) {
  if (binds(atom)) {
    throw std::invalid_argument("atom '" + atom.name() + "' is quantified twice");
  }
  entries_.push_back({quantifier, std::move(atom)});
}

Binder Binder::tail() const {
  Binder rest;
  if (!entries_.empty()) rest.entries_.assign(entries_.begin() + 1, entries_.end());
  return rest;
}

bool Binder::binds(const Atom& atom) const {
  for (const auto& e : entries_) {
    if (e.atom == atom) return true;
  }
  return false;
}

AtomSet Binder::atoms() const {
  AtomSet out;
  for (const auto& e : entries_) out.insert(e.atom);
  return out;
}

Binder exists(std::string_view name) { return {{Quantifier::exists, Atom(std::string(name))}}; }
Binder forall(std::string_view name) { return {{Quantifier::forall, Atom(std::string(name))}}; }

Binder operator+(const Binder& lhs, const Binder& rhs) {
  Binder out = lhs;
  for (const auto& e : rhs) out.push_back(e.quantifier, e.atom);
  return out;
}

namespace {

void collect(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Connective::bot:
      return;
    case Connective::var:
      out.insert(f.atom());
      return;
    default:
      collect(f.left(), out);
      collect(f.right(), out);
  }
}

// Binding strength, loosest first.
enum Precedence { kImplies = 0, kDisj = 1, kConj = 2, kUnary = 3 };

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Connective::implies:
      return f.is_negation() ? kUnary : kImplies;
    case Connective::disj:
      return kDisj;
    case Connective::conj:
      return kConj;
    default:
      return kUnary;
  }
}

void print(std::ostream& os, const Formula& f, int context) {
  bool wrap = precedence(f) < context;
  if (wrap) os << '(';
  switch (f.kind()) {
    case Connective::bot:
      os << "bot";
      break;
    case Connective::var:
      os << f.atom().name();
      break;
    case Connective::conj:
      print(os, f.left(), kConj);
      os << " & ";
      print(os, f.right(), kUnary);
      break;
    case Connective::disj:
      print(os, f.left(), kDisj);
      os << " | ";
      print(os, f.right(), kConj);
      break;
    case Connective::implies:
      if (f.is_top()) {
        os << "true";
      } else if (f.is_negation()) {
        os << '~';
        print(os, f.left(), kUnary);
      } else {
        print(os, f.left(), kDisj);
        os << " -> ";
        print(os, f.right(), kImplies);
      }
      break;
  }
  if (wrap) os << ')';
}

}  // namespace

AtomSet variables(const Formula& formula) {
  AtomSet out;
  collect(formula, out);
  return out;
}

AtomSet variables(const Theory& theory) {
  AtomSet out;
  for (const auto& f : theory) collect(f, out);
  return out;
}

AtomSet variables(const QuantifiedTheory& theory, bool include_binder) {
  AtomSet out = variables(theory.matrix);
  if (include_binder) {
    for (const auto& e : theory.binder) out.insert(e.atom);
  }
  return out;
}

AtomSet free_variables(const QuantifiedTheory& theory) {
  AtomSet out;
  for (const auto& a : variables(theory.matrix)) {
    if (!theory.binder.binds(a)) out.insert(a);
  }
  return out;
}

std::string to_string(const Formula& formula) {
  std::ostringstream os;
  print(os, formula, kImplies);
  return os.str();
}

std::string to_string(Quantifier quantifier) {
  return quantifier == Quantifier::exists ? "exists" : "forall";
}

std::string to_string(const Binder& binder) {
  std::string out;
  for (const auto& e : binder) {
    if (!out.empty()) out += ' ';
    out += to_string(e.quantifier) + " " + e.atom.name() + ".";
  }
  return out;
}

std::string to_string(const QuantifiedTheory& theory) {
  std::string out = to_string(theory.binder);
  if (!out.empty()) out += '\n';
  for (const auto& f : theory.matrix) out += to_string(f) + ".\n";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Atom& atom) { return os << atom.name(); }
std::ostream& operator<<(std::ostream& os, const Formula& formula) {
  return os << to_string(formula);
}
std::ostream& operator<<(std::ostream& os, const Binder& binder) {
  return os << to_string(binder);
}

}  // namespace qep
