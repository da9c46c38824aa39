#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opa::rdf {

/// Raised when a Term or Triple would violate its structural invariants.
class InvalidTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF node. Equality is purely lexical: kind, text, datatype and
/// language tag must all match.
class Term {
 public:
  /// An absolute IRI. Throws InvalidTerm on empty text or whitespace.
  static Term iri(std::string text);
  /// A blank node with a document-scoped label (without the `_:` prefix).
  static Term blank(std::string label);
  /// A typed literal; the datatype defaults to xsd:string.
  static Term literal(std::string lexical, std::string datatype = {});
  /// A language-tagged literal (datatype rdf:langString).
  static Term langLiteral(std::string lexical, std::string language);

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isBlank() const { return kind_ == TermKind::BlankNode; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }

  /// IRI text, blank node label, or literal lexical form.
  const std::string& value() const { return value_; }
  /// Datatype IRI; empty for non-literals.
  const std::string& datatype() const { return datatype_; }
  /// Language tag; empty when absent.
  const std::string& language() const { return language_; }

  /// N-Triples surface form, e.g. `<http://x>`, `_:b0`, `"1"^^<...#integer>`.
  std::string toNTriples() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_ = TermKind::Iri;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

std::ostream& operator<<(std::ostream& os, const Term& term);

/// Escapes a literal lexical form for N-Triples (quotes, backslash, controls).
std::string escapeLiteral(std::string_view text);
/// Escapes characters not allowed inside an N-Triples IRIREF.
std::string escapeIri(std::string_view text);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace opa::rdf
