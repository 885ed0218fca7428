#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qep/policy.hpp"

namespace qep {

enum class Format { text, json, dot };

// One-line form: "forall x (0: z=0; lambda, 1: z=1; lambda)".
template <Branching B>
std::string to_compact_string(const BasicPolicy<B>& policy);

// Indented tree, one node per line, each child prefixed by its edge label:
//
//   forall x
//     [0] exists z
//       [0] lambda
//     [1] exists z
//       [1] lambda
//
// A bare leaf renders as "lambda".
template <Branching B>
std::string render_text(const BasicPolicy<B>& policy);

// Graphviz digraph. Node ids are preorder indices (n0 is the root); edges
// carry the labels 0, 1/2 and 1.
template <Branching B>
std::string render_dot(const BasicPolicy<B>& policy, std::string_view graph_name = "policy");

// {"kind":"exists","var":"x","value":"1","sub":{...}}
// {"kind":"forall","var":"x","branches":{"0":{...},"1":{...}}}   ("1/2" when ternary)
// {"kind":"leaf"}
template <Branching B>
nlohmann::ordered_json to_json(const BasicPolicy<B>& policy);

// Inverse of to_json. Throws std::invalid_argument on malformed input.
template <Branching B>
BasicPolicy<B> policy_from_json(const nlohmann::ordered_json& json);

template <Branching B>
std::string render(const BasicPolicy<B>& policy, Format format) {
  switch (format) {
    case Format::json:
      return to_json(policy).dump();
    case Format::dot:
      return render_dot(policy);
    case Format::text:
      break;
  }
  return render_text(policy);
}

extern template std::string to_compact_string(const QbfPolicy&);
extern template std::string to_compact_string(const Qg3Policy&);
extern template std::string render_text(const QbfPolicy&);
extern template std::string render_text(const Qg3Policy&);
extern template std::string render_dot(const QbfPolicy&, std::string_view);
extern template std::string render_dot(const Qg3Policy&, std::string_view);
extern template nlohmann::ordered_json to_json(const QbfPolicy&);
extern template nlohmann::ordered_json to_json(const Qg3Policy&);
extern template QbfPolicy policy_from_json(const nlohmann::ordered_json&);
extern template Qg3Policy policy_from_json(const nlohmann::ordered_json&);

}  // namespace qep
