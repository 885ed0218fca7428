#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qep/oracle.hpp"
#include "qep/parser.hpp"
#include "qep/qasp.hpp"
#include "qep/qem.hpp"
#include "qep/render.hpp"

namespace qep::cli {
namespace {

using nlohmann::ordered_json;

struct Config {
  std::string input = "-";
  std::string format_name = "text";
  std::string semantics_name = "fandinno";
  Format format = Format::text;
  std::string at;
  bool allow_free = false;
  SemanticsKind semantics = SemanticsKind::fandinno;
  bool game = false;
  bool oracle = false;
  bool prune_hc = false;
  bool trace = false;
  bool ternary = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  text << file.rdbuf();
  return text.str();
}

Interp3 conditioning(const Config& config) {
  try {
    return parse_interpretation(config.at);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--at: ") + e.what());
  }
}

template <Branching B>
void print_policies(const std::vector<BasicPolicy<B>>& policies, Format format, std::ostream& out,
                    bool compact) {
  switch (format) {
    case Format::json: {
      ordered_json list = ordered_json::array();
      for (const auto& p : policies) list.push_back(to_json(p));
      out << ordered_json{{"policies", list}}.dump(2) << "\n";
      return;
    }
    case Format::dot:
      for (std::size_t i = 0; i < policies.size(); ++i) {
        out << render_dot(policies[i], "policy" + std::to_string(i + 1));
      }
      return;
    case Format::text:
      for (std::size_t i = 0; i < policies.size(); ++i) {
        if (compact) {
          out << to_compact_string(policies[i]) << "\n";
        } else {
          if (i > 0) out << "\n";
          out << render_text(policies[i]) << "\n";
        }
      }
      return;
  }
}

std::vector<QbfPolicy> as_vector(const QbfPolicySet& set) { return {set.begin(), set.end()}; }

int cmd_eval(const Config& config, const std::string& text, std::ostream& out) {
  QuantifiedTheory theory = parse_theory(text, ParseOptions{.allow_free = true});
  Interp3 m = conditioning(config);
  AtomSet matrix_atoms = variables(theory.matrix);
  ordered_json report = ordered_json::object();
  if (m.is_total_over(matrix_atoms)) {
    Interp3 restricted;
    for (const auto& a : matrix_atoms) restricted.assign(a, m.at(a));
    report["classical"] = restricted.is_crisp()
                              ? std::string(to_string(eval_theory(m, theory.matrix, EvalMode::classical)))
                              : "-";
    report["g3"] = std::string(to_string(eval_theory(m, theory.matrix)));
  }
  if (!theory.binder.empty()) {
    report["qg3"] = std::string(to_string(eval_qg3(m, theory.binder, theory.matrix)));
  }
  if (report.empty()) {
    for (const auto& a : matrix_atoms) {
      if (!m.defines(a)) throw UndefinedAtomError(a.name());
    }
  }
  if (config.format == Format::json) {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : report.items()) out << key << ": " << value.get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_models(const Config& config, const std::string& text, std::ostream& out) {
  QuantifiedTheory theory = parse_theory(text, ParseOptions{.allow_free = config.allow_free});
  InterpSet models = equilibrium_models(theory.matrix, variables(theory, true),
                                        Limits::from_environment());
  if (config.format == Format::json) {
    ordered_json list = ordered_json::array();
    for (const auto& m : models) list.push_back(to_string(m));
    out << ordered_json{{"models", list}}.dump(2) << "\n";
  } else if (models.empty()) {
    out << "no equilibrium models\n";
  } else {
    for (const auto& m : models) out << "{" << to_string(m) << "}\n";
  }
  return models.empty() ? kUnsat : kOk;
}

int cmd_sat(const Config& config, const std::string& text, std::ostream& out) {
  QuantifiedTheory theory = parse_theory(text, ParseOptions{.allow_free = config.allow_free});
  bool sat = sat_qasp(theory, config.semantics, Limits::from_environment());
  if (config.format == Format::json) {
    out << ordered_json{{"semantics", std::string(to_string(config.semantics))}, {"sat", sat}}.dump(2)
        << "\n";
  } else {
    out << (sat ? "SAT" : "UNSAT") << "\n";
  }
  return sat ? kOk : kUnsat;
}

int cmd_policies(const Config& config, const std::string& text, std::ostream& out,
                 std::ostream& err) {
  QuantifiedTheory theory = parse_theory(text, ParseOptions{.allow_free = config.allow_free});
  Limits limits = Limits::from_environment();
  QbfPolicySet policies;
  if (config.game) {
    policies = accepted_policies(theory, config.semantics, limits);
  } else {
    QemOptions options;
    options.prune_hc = config.prune_hc;
    options.limits = limits;
    if (config.trace) options.trace = [&err](const std::string& line) { err << line << "\n"; };
    policies = equilibrium_policies(theory, options, conditioning(config));
    if (config.oracle) {
      auto expected = brute_equilibrium_policies(theory.binder, theory.matrix, limits).policies;
      if (expected != policies) {
        err << "oracle mismatch: QEM found " << policies.size() << " policies, the oracle "
            << expected.size() << "\n";
        for (const auto& p : policies) {
          if (!expected.contains(p)) err << "  only QEM:    " << to_compact_string(p) << "\n";
        }
        for (const auto& p : expected) {
          if (!policies.contains(p)) err << "  only oracle: " << to_compact_string(p) << "\n";
        }
        return kOracleMismatch;
      }
    }
  }
  if (policies.empty()) {
    if (config.format == Format::json) {
      print_policies(as_vector(policies), config.format, out, false);
    } else {
      out << (config.game ? "UNSAT (no accepted policy)" : "UNSAT (no equilibrium policy)") << "\n";
    }
    return kUnsat;
  }
  print_policies(as_vector(policies), config.format, out, false);
  return kOk;
}

int cmd_oracle(const Config& config, const std::string& text, std::ostream& out) {
  QuantifiedTheory theory = parse_theory(text);
  OracleResult result = brute_equilibrium_policies(theory.binder, theory.matrix,
                                                   Limits::from_environment());
  if (config.format == Format::json) {
    ordered_json list = ordered_json::array();
    for (const auto& [p, leaves] : result.witnesses) {
      ordered_json models = ordered_json::array();
      for (const auto& m : leaves) models.push_back(to_string(m));
      list.push_back({{"policy", to_json(p)}, {"witnesses", models}});
    }
    out << ordered_json{{"inspected", result.inspected}, {"policies", list}}.dump(2) << "\n";
  } else if (config.format == Format::dot) {
    print_policies(as_vector(result.policies), config.format, out, false);
  } else {
    out << "inspected " << result.inspected << " policies\n";
    for (const auto& [p, leaves] : result.witnesses) {
      out << "\n" << render_text(p) << "\nwitnesses:";
      for (const auto& m : leaves) out << " {" << to_string(m) << "}";
      out << "\n";
    }
    if (result.policies.empty()) out << "UNSAT (no equilibrium policy)\n";
  }
  return result.policies.empty() ? kUnsat : kOk;
}

int cmd_compare(const Config& config, const std::string& text, std::ostream& out) {
  QuantifiedTheory theory = parse_theory(text, ParseOptions{.allow_free = config.allow_free});
  SemanticsReport report = compare_semantics(theory, Limits::from_environment());
  out << to_json(report).dump(2) << "\n";
  return report.diverges() ? kSemanticsDiverge : kOk;
}

int cmd_enumerate(const Config& config, const std::string& text, std::ostream& out) {
  QuantifiedTheory theory = parse_theory(text, ParseOptions{.allow_free = true});
  Limits limits = Limits::from_environment();
  if (config.ternary) {
    print_policies(enumerate_policies<Branching::ternary>(theory.binder, limits), config.format, out, true);
  } else {
    print_policies(enumerate_policies<Branching::binary>(theory.binder, limits), config.format, out, true);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config config;
  CLI::App app{"Quantified equilibrium policies for prenex propositional theories", "qep"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};
  const std::map<std::string, SemanticsKind> semantics{
      {"fandinno", SemanticsKind::fandinno}, {"stephan", SemanticsKind::stephan}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", config.input, "Theory file; '-' or nothing reads stdin");
    cmd->add_option("--format", config.format_name, "Output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };
  auto add_allow_free = [&](CLI::App* cmd) {
    cmd->add_flag("--allow-free", config.allow_free, "Accept matrix atoms outside the binder");
  };
  auto add_semantics = [&](CLI::App* cmd) {
    cmd->add_option("--semantics", config.semantics_name, "QASP semantics: fandinno or stephan")
        ->check(CLI::IsMember({"fandinno", "stephan"}));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the theory classically, in G3 and in QG3");
  add_common(eval);
  eval->add_option("--at", config.at, "Interpretation, e.g. \"x=1/2, z=0\"");

  auto* models = app.add_subcommand("models", "Equilibrium models of the matrix");
  add_common(models);
  add_allow_free(models);

  auto* sat = app.add_subcommand("sat", "QASP satisfiability");
  add_common(sat);
  add_allow_free(sat);
  add_semantics(sat);

  auto* policies = app.add_subcommand("policies", "Equilibrium policies (or accepted policies with --game)");
  add_common(policies);
  add_allow_free(policies);
  add_semantics(policies);
  policies->add_option("--at", config.at, "Values of the free atoms");
  policies->add_flag("--game", config.game, "Policies accepted by the QASP semantics instead");
  auto* oracle_flag = policies->add_flag("--oracle", config.oracle, "Cross-check against the brute-force oracle");
  policies->add_flag("--prune-hc", config.prune_hc, "Keep only minimal non-crisp models");
  policies->add_flag("--trace", config.trace, "One line per elimination step on stderr");
  oracle_flag->excludes(policies->get_option("--game"));

  auto* oracle = app.add_subcommand("oracle", "Equilibrium policies by exhaustive search");
  add_common(oracle);

  auto* compare = app.add_subcommand("compare", "Compare the two QASP semantics (JSON report)");
  add_common(compare);
  add_allow_free(compare);

  auto* enumerate = app.add_subcommand("enumerate", "Every policy conforming to the binder");
  add_common(enumerate);
  enumerate->add_flag("--ternary", config.ternary, "Branch over 0, 1/2 and 1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }
  config.format = formats.at(config.format_name);
  config.semantics = semantics.at(config.semantics_name);

  try {
    std::string text = read_input(config.input, in);
    if (eval->parsed()) return cmd_eval(config, text, out);
    if (models->parsed()) return cmd_models(config, text, out);
    if (sat->parsed()) return cmd_sat(config, text, out);
    if (policies->parsed()) return cmd_policies(config, text, out, err);
    if (oracle->parsed()) return cmd_oracle(config, text, out);
    if (compare->parsed()) return cmd_compare(config, text, out);
    return cmd_enumerate(config, text, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const UndefinedAtomError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace qep::cli
