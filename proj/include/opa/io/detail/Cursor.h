#pragma once

// Character cursor shared by the Turtle and N-Triples parsers.

#include <cstdint>
#include <string>
#include <string_view>

#include "opa/io/ParseError.h"

namespace opa::io::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  std::size_t offset() const { return pos_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::string_view rest() const { return text_.substr(pos_); }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;  // count code points, not UTF-8 continuation bytes
    }
    return c;
  }

  /// Steps back over one ASCII character that is not a newline.
  void unread() {
    --pos_;
    --column_;
  }

  bool consume(char c) {
    if (peek() != c || atEnd()) return false;
    advance();
    return true;
  }

  bool consume(std::string_view word) {
    if (!rest().starts_with(word)) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  /// Skips whitespace and, when `comments` is set, `#` line comments.
  void skipSpace(bool comments, bool newlines = true) {
    while (!atEnd()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        advance();
      } else if (comments && c == '#') {
        while (!atEnd() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(std::string message,
                         DiagnosticKind kind = DiagnosticKind::Syntax) const {
    throw ParseError({line_, column_, std::move(message), kind});
  }

  void expect(char c, std::string_view context) {
    if (!consume(c)) {
      fail("expected '" + std::string(1, c) + "' " + std::string(context) + describeHere());
    }
  }

  std::string describeHere() const {
    if (atEnd()) return ", found end of input";
    char c = peek();
    if (c == '\n') return ", found end of line";
    return ", found '" + std::string(1, c) + "'";
  }

  /// `<...>` with \u escapes; returns the raw (unresolved) IRI text.
  std::string readIriRef();
  /// Short or long quoted string starting at the current quote character.
  std::string readQuoted();
  /// Language tag after '@' (the '@' already consumed).
  std::string readLangTag();
  /// Blank node label after "_:" (the prefix already consumed).
  std::string readBlankLabel();

 private:
  std::uint32_t readHex(int digits);
  void readEscape(std::string& out);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

void appendUtf8(std::string& out, std::uint32_t cp);

inline void checkDocumentSize(std::string_view text, std::size_t maxBytes) {
  if (text.size() > maxBytes) {
    throw ParseError({1, 1,
                      "document of " + std::to_string(text.size()) +
                          " bytes exceeds the limit of " + std::to_string(maxBytes) + " bytes",
                      DiagnosticKind::Limit});
  }
}

}  // namespace opa::io::detail
