#include "support/properties.hpp"

namespace qep::testing {
namespace {

std::string describe(const char* what, const Formula& f, const Interp3& m) {
  return std::string(what) + " fails for " + to_string(f) + " at {" + to_string(m) + "}";
}

std::string describe(const char* what, const Theory& gamma, const Atom& x) {
  std::string text;
  for (const auto& f : gamma) text += to_string(f) + ". ";
  return std::string(what) + " fails for " + text + "with " + x.name();
}

InterpSet with_value(const InterpSet& models, const Atom& x, Truth v) {
  InterpSet out;
  for (const auto& m : models) {
    if (m.at(x) == v) out.insert(m);
  }
  return out;
}

Theory plus(const Theory& gamma, Formula extra) {
  Theory out = gamma;
  out.push_back(std::move(extra));
  return out;
}

}  // namespace

std::string check_crisp_is_classical(const Formula& f, const Interp3& m) {
  Interp3 c = crisp(m);
  Truth v = eval3(c, f);
  if (!is_crisp(v) || v != eval2(c, f)) return describe("crisp evaluation", f, m);
  return {};
}

std::string check_persistency(const Formula& f, const Interp3& m) {
  Truth v = eval3(m, f);
  Truth lifted = eval3(crisp(m), f);
  if ((v != Truth::zero) != (lifted == Truth::one)) return describe("persistency", f, m);
  return {};
}

std::string check_negation_reads_crisp(const Formula& f, const Interp3& m) {
  bool negated = eval3(m, Formula::negation(f)) == Truth::one;
  if (negated != (eval3(crisp(m), f) == Truth::zero)) return describe("negation", f, m);
  return {};
}

std::string check_double_negation_filter(const Theory& gamma, const Atom& x,
                                         const AtomSet& domain) {
  InterpSet lhs = equilibrium_models(plus(gamma, Formula::negation(Formula::negation(Formula::var(x)))), domain);
  if (lhs != with_value(equilibrium_models(gamma, domain), x, Truth::one)) {
    return describe("double negation filter", gamma, x);
  }
  return {};
}

std::string check_negation_filter(const Theory& gamma, const Atom& x, const AtomSet& domain) {
  InterpSet lhs = equilibrium_models(plus(gamma, Formula::negation(Formula::var(x))), domain);
  if (lhs != with_value(equilibrium_models(gamma, domain), x, Truth::zero)) {
    return describe("negation filter", gamma, x);
  }
  return {};
}

std::string check_fact_lifting(const Theory& gamma, const Atom& x, const AtomSet& domain) {
  InterpSet weak = equilibrium_models(plus(gamma, Formula::negation(Formula::negation(Formula::var(x)))), domain);
  InterpSet strong = equilibrium_models(plus(gamma, Formula::var(x)), domain);
  for (const auto& m : weak) {
    if (!strong.contains(m)) return describe("fact lifting", gamma, x);
  }
  return {};
}

std::vector<Formula> all_formulas(std::span<const Atom> atoms, int depth) {
  std::vector<Formula> out{Formula::bot()};
  for (const auto& a : atoms) out.push_back(Formula::var(a));
  for (int d = 0; d < depth; ++d) {
    std::vector<Formula> next{Formula::bot()};
    for (const auto& a : atoms) next.push_back(Formula::var(a));
    for (const auto& l : out) {
      for (const auto& r : out) {
        next.push_back(Formula::conj(l, r));
        next.push_back(Formula::disj(l, r));
        next.push_back(Formula::implies(l, r));
      }
    }
    out = std::move(next);
  }
  return out;
}

PropertyTally run_property_suites(std::uint64_t randomized_cases, std::uint64_t seed) {
  PropertyTally tally;
  auto note = [&](std::string problem) {
    ++tally.cases;
    if (!problem.empty() && tally.violations.size() < 20) tally.violations.push_back(std::move(problem));
  };
  auto formula_checks = [&](const Formula& f, const Interp3& m) {
    note(check_crisp_is_classical(f, m));
    note(check_persistency(f, m));
    note(check_negation_reads_crisp(f, m));
  };
  auto theory_checks = [&](const Theory& gamma, std::span<const Atom> atoms) {
    AtomSet domain(atoms.begin(), atoms.end());
    for (const auto& x : atoms) {
      note(check_double_negation_filter(gamma, x, domain));
      note(check_negation_filter(gamma, x, domain));
      note(check_fact_lifting(gamma, x, domain));
    }
  };

  // Every formula of depth <= 2 over three atoms, at every interpretation
  // and as a one-formula theory.
  auto abc = atoms({"a", "b", "c"});
  auto abc_all = all_interpretations(abc);
  for (const auto& f : all_formulas(abc, 2)) {
    for (const auto& m : abc_all) formula_checks(f, m);
    theory_checks({f}, abc);
  }

  // Random theories over three atoms, checked over every atom.
  Rng rng(seed);
  for (int i = 0; i < 2000; ++i) theory_checks(random_theory(rng, abc), abc);

  auto abcd = atoms({"a", "b", "c", "d"});
  AtomSet abcd_domain(abcd.begin(), abcd.end());
  std::uniform_int_distribution<std::size_t> pick_atom(0, abcd.size() - 1);
  for (std::uint64_t i = 0; i < randomized_cases; ++i) {
    Formula f = random_formula(rng, abcd, 4);
    formula_checks(f, random_interpretation(rng, abcd));
    Theory gamma = random_theory(rng, abcd, 3);
    const Atom& x = abcd[pick_atom(rng)];
    switch (i % 3) {
      case 0:
        note(check_double_negation_filter(gamma, x, abcd_domain));
        break;
      case 1:
        note(check_negation_filter(gamma, x, abcd_domain));
        break;
      default:
        note(check_fact_lifting(gamma, x, abcd_domain));
        break;
    }
    ++tally.randomized_cases;
  }
  return tally;
}

}  // namespace qep::testing
