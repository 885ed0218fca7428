#include "qep/render.hpp"

#include <sstream>
#include <stdexcept>

namespace qep {
namespace {

template <Branching B>
using Kind = typename BasicPolicy<B>::Kind;

template <Branching B>
void compact(std::ostream& os, const BasicPolicy<B>& p) {
  switch (p.kind()) {
    case Kind<B>::leaf:
      os << "lambda";
      return;
    case Kind<B>::exists:
      os << p.atom() << '=' << to_string(p.value()) << "; ";
      compact(os, p.sub());
      return;
    case Kind<B>::forall: {
      os << "forall " << p.atom() << " (";
      auto values = BasicPolicy<B>::values();
      auto branches = p.branches();
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) os << ", ";
        os << to_string(values[k]) << ": ";
        compact(os, branches[k]);
      }
      os << ')';
      return;
    }
  }
}

template <Branching B>
void text_node(std::ostream& os, const BasicPolicy<B>& p, std::size_t depth,
               std::string_view edge) {
  os << std::string(2 * depth, ' ');
  if (!edge.empty()) os << '[' << edge << "] ";
  switch (p.kind()) {
    case Kind<B>::leaf:
      os << "lambda\n";
      return;
    case Kind<B>::exists:
      os << "exists " << p.atom() << '\n';
      text_node(os, p.sub(), depth + 1, to_string(p.value()));
      return;
    case Kind<B>::forall: {
      os << "forall " << p.atom() << '\n';
      auto values = BasicPolicy<B>::values();
      auto branches = p.branches();
      for (std::size_t k = 0; k < values.size(); ++k) {
        text_node(os, branches[k], depth + 1, to_string(values[k]));
      }
      return;
    }
  }
}

template <Branching B>
std::size_t dot_node(std::ostream& os, const BasicPolicy<B>& p, std::size_t& next_id) {
  std::size_t id = next_id++;
  os << "  n" << id << " [label=\"" << (p.is_leaf() ? std::string("lambda") : p.atom().name())
     << "\"];\n";
  auto edge = [&](const BasicPolicy<B>& child, Truth label) {
    std::size_t child_id = dot_node(os, child, next_id);
    os << "  n" << id << " -> n" << child_id << " [label=\"" << to_string(label) << "\"];\n";
  };
  if (p.kind() == Kind<B>::exists) {
    edge(p.sub(), p.value());
  } else if (p.kind() == Kind<B>::forall) {
    auto values = BasicPolicy<B>::values();
    auto branches = p.branches();
    for (std::size_t k = 0; k < values.size(); ++k) edge(branches[k], values[k]);
  }
  return id;
}

Truth json_truth(const nlohmann::ordered_json& j) {
  if (!j.is_string()) throw std::invalid_argument("policy value must be a string");
  auto v = parse_truth(j.get<std::string>());
  if (!v) throw std::invalid_argument("bad policy value '" + j.get<std::string>() + "'");
  return *v;
}

}  // namespace

template <Branching B>
std::string to_compact_string(const BasicPolicy<B>& policy) {
  std::ostringstream os;
  compact(os, policy);
  return os.str();
}

template <Branching B>
std::string render_text(const BasicPolicy<B>& policy) {
  std::ostringstream os;
  text_node(os, policy, 0, "");
  std::string out = os.str();
  out.pop_back();
  return out;
}

template <Branching B>
std::string render_dot(const BasicPolicy<B>& policy, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  std::size_t next_id = 0;
  dot_node(os, policy, next_id);
  os << "}\n";
  return os.str();
}

template <Branching B>
nlohmann::ordered_json to_json(const BasicPolicy<B>& policy) {
  nlohmann::ordered_json j;
  switch (policy.kind()) {
    case Kind<B>::leaf:
      j["kind"] = "leaf";
      break;
    case Kind<B>::exists:
      j["kind"] = "exists";
      j["var"] = policy.atom().name();
      j["value"] = std::string(to_string(policy.value()));
      j["sub"] = to_json(policy.sub());
      break;
    case Kind<B>::forall: {
      j["kind"] = "forall";
      j["var"] = policy.atom().name();
      nlohmann::ordered_json branches = nlohmann::ordered_json::object();
      auto values = BasicPolicy<B>::values();
      auto subs = policy.branches();
      for (std::size_t k = 0; k < values.size(); ++k) {
        branches[std::string(to_string(values[k]))] = to_json(subs[k]);
      }
      j["branches"] = std::move(branches);
      break;
    }
  }
  return j;
}

template <Branching B>
BasicPolicy<B> policy_from_json(const nlohmann::ordered_json& json) {
  using Policy = BasicPolicy<B>;
  if (!json.is_object() || !json.contains("kind") || !json["kind"].is_string()) {
    throw std::invalid_argument("policy node needs a string \"kind\"");
  }
  const auto kind = json["kind"].get<std::string>();
  if (kind == "leaf") return Policy::leaf();
  if (!json.contains("var") || !json["var"].is_string()) {
    throw std::invalid_argument("policy node needs a string \"var\"");
  }
  Atom x(json["var"].get<std::string>());
  if (kind == "exists") {
    if (!json.contains("value") || !json.contains("sub")) {
      throw std::invalid_argument("existential node needs \"value\" and \"sub\"");
    }
    return Policy::exists(std::move(x), json_truth(json["value"]),
                          policy_from_json<B>(json["sub"]));
  }
  if (kind == "forall") {
    if (!json.contains("branches") || !json["branches"].is_object() ||
        json["branches"].size() != Policy::kArity) {
      throw std::invalid_argument("universal node needs one branch per truth value");
    }
    std::vector<Policy> subs;
    for (Truth v : Policy::values()) {
      std::string key(to_string(v));
      if (!json["branches"].contains(key)) {
        throw std::invalid_argument("universal node misses branch \"" + key + "\"");
      }
      subs.push_back(policy_from_json<B>(json["branches"][key]));
    }
    return Policy::forall(std::move(x), std::move(subs));
  }
  throw std::invalid_argument("unknown policy node kind \"" + kind + "\"");
}

template std::string to_compact_string(const QbfPolicy&);
template std::string to_compact_string(const Qg3Policy&);
template std::string render_text(const QbfPolicy&);
template std::string render_text(const Qg3Policy&);
template std::string render_dot(const QbfPolicy&, std::string_view);
template std::string render_dot(const Qg3Policy&, std::string_view);
template nlohmann::ordered_json to_json(const QbfPolicy&);
template nlohmann::ordered_json to_json(const Qg3Policy&);
template QbfPolicy policy_from_json(const nlohmann::ordered_json&);
template Qg3Policy policy_from_json(const nlohmann::ordered_json&);

}  // namespace qep
