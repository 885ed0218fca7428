#include "qep/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace qep {
namespace {

enum class Tok { ident, kw_exists, kw_forall, kw_bot, kw_true, dot, tilde, amp, bar, arrow, lparen, rparen, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.type == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t{Tok::end, "", line_, column_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        advance();
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      if (t.text == "exists") {
        t.type = Tok::kw_exists;
      } else if (t.text == "forall") {
        t.type = Tok::kw_forall;
      } else if (t.text == "bot" || t.text == "false") {
        t.type = Tok::kw_bot;
      } else if (t.text == "true") {
        t.type = Tok::kw_true;
      } else if (Atom::is_valid_name(t.text)) {
        t.type = Tok::ident;
      } else {
        throw ParseError("invalid identifier '" + t.text + "' (atoms match [a-z][A-Za-z0-9_]*)",
                         t.line, t.column);
      }
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      t.type = Tok::arrow;
      t.text = "->";
      return t;
    }
    switch (c) {
      case '.': t.type = Tok::dot; break;
      case '~': t.type = Tok::tilde; break;
      case '&': t.type = Tok::amp; break;
      case '|': t.type = Tok::bar; break;
      case '(': t.type = Tok::lparen; break;
      case ')': t.type = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    t.text = std::string(1, c);
    advance();
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  QuantifiedTheory theory(const ParseOptions& options) {
    QuantifiedTheory out;
    while (peek_.type == Tok::kw_exists || peek_.type == Tok::kw_forall) {
      Quantifier q = peek_.type == Tok::kw_exists ? Quantifier::exists : Quantifier::forall;
      shift();
      Token name = expect(Tok::ident, "a variable after the quantifier");
      Atom atom(name.text);
      if (out.binder.binds(atom)) {
        throw ParseError("variable '" + name.text + "' is quantified twice", name.line,
                         name.column);
      }
      out.binder.push_back(q, std::move(atom));
      expect(Tok::dot, "'.' after the quantified variable");
    }
    do {
      out.matrix.push_back(implication());
      expect(Tok::dot, "'.' at the end of the formula");
      if (peek_.type == Tok::kw_exists || peek_.type == Tok::kw_forall) {
        throw ParseError("quantifiers must precede the matrix (prenex form)", peek_.line,
                         peek_.column);
      }
    } while (peek_.type != Tok::end);

    if (!options.allow_free) {
      const std::string* culprit = nullptr;
      std::pair<std::size_t, std::size_t> at;
      for (const auto& [name, where] : first_use_) {
        if (!out.binder.binds(Atom(name)) && (culprit == nullptr || where < at)) {
          culprit = &name;
          at = where;
        }
      }
      if (culprit != nullptr) {
        throw ParseError("free variable '" + *culprit + "' (not bound by the binder)", at.first,
                         at.second);
      }
    }
    return out;
  }

  Formula single() {
    Formula f = implication();
    if (peek_.type == Tok::dot) shift();
    if (peek_.type != Tok::end) fail("end of input");
    return f;
  }

 private:
  void shift() { peek_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& wanted) {
    throw ParseError("expected " + wanted + ", found " + describe(peek_), peek_.line,
                     peek_.column);
  }

  Token expect(Tok type, const std::string& wanted) {
    if (peek_.type != type) fail(wanted);
    Token t = peek_;
    shift();
    return t;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek_.type == Tok::arrow) {
      shift();
      return Formula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek_.type == Tok::bar) {
      shift();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (peek_.type == Tok::amp) {
      shift();
      f = Formula::conj(std::move(f), negation());
    }
    return f;
  }

  Formula negation() {
    if (peek_.type == Tok::tilde) {
      shift();
      return Formula::negation(negation());
    }
    return primary();
  }

  Formula primary() {
    switch (peek_.type) {
      case Tok::ident: {
        Token t = peek_;
        shift();
        first_use_.try_emplace(t.text, t.line, t.column);
        return Formula::var(Atom(t.text));
      }
      case Tok::kw_bot:
        shift();
        return Formula::bot();
      case Tok::kw_true:
        shift();
        return Formula::top();
      case Tok::lparen: {
        shift();
        Formula f = implication();
        expect(Tok::rparen, "')'");
        return f;
      }
      default:
        fail("an atom, 'bot', 'true', '~' or '('");
    }
  }

  Lexer lexer_;
  Token peek_{Tok::end, "", 1, 1};
  std::map<std::string, std::pair<std::size_t, std::size_t>> first_use_;
};

}  // namespace

QuantifiedTheory parse_theory(std::string_view text, const ParseOptions& options) {
  return Parser(text).theory(options);
}

Formula parse_formula(std::string_view text) { return Parser(text).single(); }

}  // namespace qep
