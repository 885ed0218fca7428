#include "qep/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qep {

std::string_view to_string(Truth v) {
  switch (v) {
    case Truth::zero:
      return "0";
    case Truth::half:
      return "1/2";
    case Truth::one:
      return "1";
  }
  return "?";
}

std::optional<Truth> parse_truth(std::string_view text) {
  if (text == "0") return Truth::zero;
  if (text == "1/2") return Truth::half;
  if (text == "1") return Truth::one;
  return std::nullopt;
}

std::optional<Truth> Interp3::get(const Atom& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Truth Interp3::at(const Atom& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw UndefinedAtomError(atom.name());
  return it->second;
}

Interp3 Interp3::updated(const Atom& atom, Truth value) const {
  Interp3 out = *this;
  out.assign(atom, value);
  return out;
}

AtomSet Interp3::domain() const {
  AtomSet out;
  for (const auto& [a, v] : values_) out.insert(a);
  return out;
}

bool Interp3::is_crisp() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& kv) { return qep::is_crisp(kv.second); });
}

bool Interp3::is_total_over(const AtomSet& atoms) const {
  return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return defines(a); });
}

std::string to_string(const Interp3& m) {
  std::string out;
  for (const auto& [a, v] : m) {
    if (!out.empty()) out += ", ";
    out += a.name();
    out += '=';
    out += to_string(v);
  }
  return out;
}

Interp3 parse_interpretation(std::string_view text) {
  Interp3 out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (true) {
    std::size_t comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("expected atom=value, got '" + std::string(item) + "'");
      }
      std::string name(trim(item.substr(0, eq)));
      auto value = parse_truth(trim(item.substr(eq + 1)));
      if (!value) {
        throw std::invalid_argument("truth value of '" + name + "' must be 0, 1/2 or 1");
      }
      if (!Atom::is_valid_name(name)) {
        throw std::invalid_argument("invalid atom name '" + name + "'");
      }
      Atom atom(name);
      if (out.defines(atom)) throw std::invalid_argument("atom '" + name + "' assigned twice");
      out.assign(atom, *value);
    } else if (comma != std::string_view::npos) {
      throw std::invalid_argument("empty entry in interpretation");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Interp3 update(const Interp3& m, const Atom& x, Truth value) { return m.updated(x, value); }

namespace {

template <bool kClassical>
Truth eval(const Interp3& m, const Formula& f) {
  switch (f.kind()) {
    case Connective::bot:
      return Truth::zero;
    case Connective::var: {
      Truth v = m.at(f.atom());
      if constexpr (kClassical) {
        if (!is_crisp(v)) throw NonCrispError(f.atom().name());
      }
      return v;
    }
    case Connective::conj:
      return std::min(eval<kClassical>(m, f.left()), eval<kClassical>(m, f.right()));
    case Connective::disj:
      return std::max(eval<kClassical>(m, f.left()), eval<kClassical>(m, f.right()));
    case Connective::implies: {
      Truth a = eval<kClassical>(m, f.left());
      Truth b = eval<kClassical>(m, f.right());
      if (a <= b) return Truth::one;
      return kClassical ? Truth::zero : b;
    }
  }
  return Truth::zero;
}

Truth lift(Truth v) { return v == Truth::half ? Truth::one : v; }

}  // namespace

Truth eval3(const Interp3& m, const Formula& f) { return eval<false>(m, f); }

Truth eval2(const Interp3& m, const Formula& f) { return eval<true>(m, f); }

Truth eval_theory(const Interp3& m, const Theory& gamma, EvalMode mode) {
  Truth out = Truth::one;
  for (const auto& f : gamma) {
    out = std::min(out, mode == EvalMode::g3 ? eval3(m, f) : eval2(m, f));
    if (out == Truth::zero) break;
  }
  return out;
}

Interp3 crisp(const Interp3& m, const Sigma& sigma) {
  Interp3 out;
  for (const auto& [a, v] : m) out.assign(a, sigma.contains(a) ? lift(v) : v);
  return out;
}

Interp3 crisp(const Interp3& m) {
  Interp3 out;
  for (const auto& [a, v] : m) out.assign(a, lift(v));
  return out;
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::equal:
      return "equal";
    case Ordering::less:
      return "less";
    case Ordering::greater:
      return "greater";
    case Ordering::incomparable:
      return "incomparable";
  }
  return "?";
}

Ordering cmp(const Interp3& m, const Interp3& m2, const Sigma& sigma) {
  bool equal = true;
  bool below = true;
  bool above = true;
  for (const auto& p : sigma) {
    Truth a = m.at(p);
    Truth b = m2.at(p);
    if (a == b) continue;
    equal = false;
    if (lift(a) != lift(b)) return Ordering::incomparable;
    below = below && a < b;
    above = above && b < a;
  }
  if (equal) return Ordering::equal;
  if (below) return Ordering::less;
  if (above) return Ordering::greater;
  return Ordering::incomparable;
}

Ordering cmp(const Interp3& m, const Interp3& m2) {
  Sigma sigma = m.domain();
  sigma.merge(m2.domain());
  return cmp(m, m2, sigma);
}

InterpSet equilibrium_models(const Theory& gamma, const AtomSet& domain, const Limits& limits) {
  if (domain.size() > limits.model_atoms) {
    throw CapExceeded("equilibrium model domain", domain.size(), limits.model_atoms);
  }
  for (const auto& a : variables(gamma)) {
    if (!domain.contains(a)) {
      throw std::invalid_argument("domain misses atom '" + a.name() + "' of the theory");
    }
  }
  std::vector<Atom> atoms(domain.begin(), domain.end());
  std::vector<Interp3> models;
  for_each_assignment(atoms, kTernaryValues, Interp3{}, [&](const Interp3& m) {
    if (is_model(m, gamma)) models.push_back(m);
  });

  InterpSet out;
  for (const auto& m : models) {
    if (!m.is_crisp()) continue;
    bool minimal = std::none_of(models.begin(), models.end(), [&](const Interp3& other) {
      return cmp(other, m, domain) == Ordering::less;
    });
    if (minimal) out.insert(m);
  }
  return out;
}

bool is_equilibrium_model(const Interp3& m, const Theory& gamma) {
  if (!m.is_crisp() || !is_model(m, gamma)) return false;
  std::vector<Atom> lowerable;
  for (const auto& [a, v] : m) {
    if (v == Truth::one) lowerable.push_back(a);
  }
  constexpr std::array<Truth, 2> kHalfOrOne{Truth::half, Truth::one};
  bool minimal = true;
  for_each_assignment(lowerable, kHalfOrOne, m, [&](const Interp3& lower) {
    if (minimal && lower != m && is_model(lower, gamma)) minimal = false;
  });
  return minimal;
}

namespace {

template <typename Leaf>
Truth eval_quantified(const Interp3& m, const Binder& binder, std::size_t i, const Leaf& leaf) {
  if (i == binder.size()) return leaf(m);
  const auto& [q, x] = binder[i];
  Truth out = q == Quantifier::forall ? Truth::one : Truth::zero;
  for (Truth v : kTernaryValues) {
    Truth sub = eval_quantified(m.updated(x, v), binder, i + 1, leaf);
    out = q == Quantifier::forall ? std::min(out, sub) : std::max(out, sub);
  }
  return out;
}

}  // namespace

Truth eval_qg3(const Interp3& m, const Binder& binder, const Formula& f) {
  return eval_quantified(m, binder, 0, [&](const Interp3& leaf) { return eval3(leaf, f); });
}

Truth eval_qg3(const Interp3& m, const Binder& binder, const Theory& gamma) {
  return eval_quantified(m, binder, 0,
                         [&](const Interp3& leaf) { return eval_theory(leaf, gamma); });
}

}  // namespace qep
