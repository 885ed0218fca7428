#pragma once

#include <string_view>

#include "qep/errors.hpp"
#include "qep/formula.hpp"

namespace qep {

struct ParseOptions {
  // Accept matrix atoms that the binder does not quantify.
  bool allow_free = false;
};

// Parses a prenex theory:
//
//   theory    := { binderent } formula+
//   binderent := ("exists" | "forall") IDENT "."
//   formula   := impl "."
//   impl      := disj [ "->" impl ]
//   disj      := conj { "|" conj }
//   conj      := neg { "&" neg }
//   neg       := "~" neg | atom
//   atom      := IDENT | "bot" | "false" | "true" | "(" impl ")"
//
// '%' starts a comment that runs to the end of the line. Throws ParseError.
QuantifiedTheory parse_theory(std::string_view text, const ParseOptions& options = {});

// A single formula; a trailing '.' is optional.
Formula parse_formula(std::string_view text);

}  // namespace qep
