#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superlie {

enum class ErrorKind {
  unknown_letter,
  empty_word,
  not_super_ls,
  occurrence_mismatch,
  zero_polynomial,
  non_homogeneous,
  alphabet_mismatch,
  not_lie_element,
  malformed_overlap,
  witness_not_super_ls,
  bracketing_failed,
  invalid_cartan,
  index_error,
  non_e_support,
  mixed_monomial,
  parameter_range,
  parse_error,
};

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Text-format errors carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace superlie
