#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qep {

// Syntax errors carry a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndefinedAtomError : public std::runtime_error {
 public:
  explicit UndefinedAtomError(const std::string& atom)
      : std::runtime_error("atom '" + atom + "' is not defined by the interpretation"),
        atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// A classical evaluation met the value 1/2.
class NonCrispError : public std::runtime_error {
 public:
  explicit NonCrispError(const std::string& atom)
      : std::runtime_error("atom '" + atom + "' has the non-classical value 1/2") {}
};

// A policy tree does not follow the shape of the binder it is used with.
class PolicyShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what + ": " + std::to_string(size) +
                           " exceeds the configured cap of " + std::to_string(cap)) {}
};

}  // namespace qep
