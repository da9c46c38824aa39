#include "opa/io/detail/Cursor.h"

#include <cctype>

namespace opa::io::detail {

void appendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::uint32_t Cursor::readHex(int digits) {
  std::uint32_t value = 0;
  for (int i = 0; i < digits; ++i) {
    char c = peek();
    if (!std::isxdigit(static_cast<unsigned char>(c)) || atEnd()) {
      fail("invalid hexadecimal escape" + describeHere());
    }
    advance();
    value = value * 16 + static_cast<std::uint32_t>(
                             std::isdigit(static_cast<unsigned char>(c))
                                 ? c - '0'
                                 : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
  }
  if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    fail("escape is not a valid code point");
  }
  return value;
}

void Cursor::readEscape(std::string& out) {
  if (atEnd()) fail("unterminated escape sequence");
  char c = advance();
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    case 'u': appendUtf8(out, readHex(4)); break;
    case 'U': appendUtf8(out, readHex(8)); break;
    default: fail("unknown escape sequence '\\" + std::string(1, c) + "'");
  }
}

std::string Cursor::readIriRef() {
  expect('<', "to open an IRI");
  std::string out;
  while (true) {
    if (atEnd()) fail("unterminated IRI");
    char c = peek();
    if (c == '>') {
      advance();
      return out;
    }
    if (c == '\\') {
      advance();
      if (peek() != 'u' && peek() != 'U') fail("only \\u and \\U escapes are allowed in IRIs");
      bool longForm = advance() == 'U';
      appendUtf8(out, readHex(longForm ? 8 : 4));
      continue;
    }
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`') {
      fail("illegal character in IRI" + describeHere());
    }
    out += advance();
  }
}

std::string Cursor::readQuoted() {
  char quote = peek();
  if (quote != '"' && quote != '\'') fail("expected a string" + describeHere());
  std::string triple(3, quote);
  bool isLong = rest().starts_with(triple);
  if (isLong) {
    consume(triple);
  } else {
    advance();
  }
  std::string out;
  while (true) {
    if (atEnd()) fail("unterminated string literal");
    char c = peek();
    if (isLong) {
      if (consume(triple)) {
        // A long string may end with up to two extra quote characters.
        while (peek() == quote && !atEnd()) {
          out += quote;
          advance();
        }
        return out;
      }
    } else {
      if (c == quote) {
        advance();
        return out;
      }
      if (c == '\n' || c == '\r') fail("line break inside a short string literal");
    }
    if (c == '\\') {
      advance();
      readEscape(out);
    } else {
      out += advance();
    }
  }
}

std::string Cursor::readLangTag() {
  std::string out;
  while (std::isalpha(static_cast<unsigned char>(peek())) && !atEnd()) out += advance();
  if (out.empty()) fail("empty language tag");
  while (peek() == '-' && std::isalnum(static_cast<unsigned char>(peek(1)))) {
    out += advance();
    while (std::isalnum(static_cast<unsigned char>(peek())) && !atEnd()) out += advance();
  }
  return out;
}

std::string Cursor::readBlankLabel() {
  std::string out;
  auto ok = [](char c, bool first) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::isalpha(u) || c == '_') return true;
    if (std::isdigit(u)) return true;
    return !first && (c == '-' || c == '.');
  };
  while (!atEnd() && ok(peek(), out.empty())) out += advance();
  // A trailing '.' terminates the statement, not the label.
  while (!out.empty() && out.back() == '.') {
    out.pop_back();
    unread();
  }
  if (out.empty()) fail("empty blank node label");
  return out;
}

}  // namespace opa::io::detail
