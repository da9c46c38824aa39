#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opa::io {

enum class DiagnosticKind { Syntax, Invariant, Limit };

/// A positioned parser message. Line and column are 1-based.
struct ParseDiagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
  DiagnosticKind kind = DiagnosticKind::Syntax;

  /// `line:col: message`; callers prepend the file name.
  std::string format() const;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic d)
      : std::runtime_error(d.format()), diagnostic_(std::move(d)) {}
  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

}  // namespace opa::io
