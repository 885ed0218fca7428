#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qep/formula.hpp"
#include "qep/semantics.hpp"

namespace qep::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kCorpusSeed = 20241016;

// The running example (z -> x) & (z | ~z).
Formula example_matrix();
// (z -> x), ~z -> y, ~y -> z: the theory separating the two QASP semantics.
Theory difference_theory();

// Thirty hand-written matrices over {x, z}; the first is example_matrix().
std::vector<Theory> matrix_pool();

// Every binder over the given atoms: each permutation with each quantifier
// assignment.
std::vector<Binder> all_binders(std::span<const Atom> atoms);

Formula random_formula(Rng& rng, std::span<const Atom> atoms, int depth);
// One to three formulas.
Theory random_theory(Rng& rng, std::span<const Atom> atoms, int depth = 3);
// A random permutation of atoms with random quantifiers.
Binder random_binder(Rng& rng, std::span<const Atom> atoms);
Interp3 random_interpretation(Rng& rng, std::span<const Atom> atoms);

// The differential corpus: every 2-atom binder over every pool matrix, then
// 200 random instances over {x, y, z} drawn with kCorpusSeed.
std::vector<QuantifiedTheory> differential_corpus();

// All 3^n interpretations over atoms.
std::vector<Interp3> all_interpretations(std::span<const Atom> atoms);

std::vector<Atom> atoms(std::initializer_list<const char*> names);

}  // namespace qep::testing
