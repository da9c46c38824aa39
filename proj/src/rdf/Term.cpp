#include "opa/rdf/Term.h"

#include <algorithm>
#include <cstdio>

#include "opa/rdf/Vocabulary.h"

namespace opa::rdf {

namespace {
bool isSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
}  // namespace

Term Term::iri(std::string text) {
  if (text.empty()) throw InvalidTerm("IRI must not be empty");
  if (std::any_of(text.begin(), text.end(), isSpace)) {
    throw InvalidTerm("IRI contains whitespace: " + text);
  }
  return Term(TermKind::Iri, std::move(text), {}, {});
}

Term Term::blank(std::string label) {
  if (label.empty()) throw InvalidTerm("blank node label must not be empty");
  return Term(TermKind::BlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype.empty()) datatype = vocab::kXsdString;
  if (datatype == vocab::kLangString) {
    throw InvalidTerm("rdf:langString literal requires a language tag");
  }
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype), {});
}

Term Term::langLiteral(std::string lexical, std::string language) {
  if (language.empty()) throw InvalidTerm("language tag must not be empty");
  return Term(TermKind::Literal, std::move(lexical), vocab::kLangString, std::move(language));
}

std::string escapeLiteral(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string escapeIri(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(u));
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

std::string Term::toNTriples() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + escapeIri(value_) + ">";
    case TermKind::BlankNode:
      return "_:" + value_;
    case TermKind::Literal: {
      std::string out = "\"" + escapeLiteral(value_) + "\"";
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (datatype_ != vocab::kXsdString) {
        out += "^^<" + escapeIri(datatype_) + ">";
      }
      return out;
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Term& term) { return os << term.toNTriples(); }

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.value());
  h ^= std::hash<std::string>{}(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::string>{}(t.language()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(t.kind());
}

}  // namespace opa::rdf
