#include <cctype>

#include "opa/io/detail/BlankNamer.h"
#include "opa/io/detail/Cursor.h"
#include "opa/io/Iri.h"
#include "opa/io/RdfIo.h"
#include "opa/rdf/Vocabulary.h"

namespace opa::io {

using rdf::Term;

namespace {

using detail::Cursor;

bool isNameStart(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalpha(u) || c == '_';
}
bool isNameChar(char c) {
  auto u = static_cast<unsigned char>(c);
  return isNameStart(c) || std::isdigit(u) || c == '-';
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const ParseOptions& options)
      : cur_(text), options_(options), blanks_(options.blankScope) {
    if (options.base) prefixes_.setBase(*options.base);
  }

  TurtleDocument run() {
    std::size_t statements = 0;
    while (true) {
      cur_.skipSpace(true);
      if (cur_.atEnd()) break;
      if (options_.deadline && (++statements & 0xFF) == 0) options_.deadline->check();
      statement();
    }
    return {std::move(out_).build(), std::move(prefixes_)};
  }

 private:
  void statement() {
    if (cur_.peek() == '@') {
      if (cur_.consume("@prefix")) {
        prefixDecl();
      } else if (cur_.consume("@base")) {
        baseDecl();
      } else {
        cur_.fail("unknown directive" + cur_.describeHere());
      }
      cur_.skipSpace(true);
      cur_.expect('.', "after directive");
      return;
    }
    if (keyword("PREFIX")) {
      prefixDecl();
      return;
    }
    if (keyword("BASE")) {
      baseDecl();
      return;
    }
    triples();
    cur_.skipSpace(true);
    cur_.expect('.', "at end of statement");
  }

  // Case-insensitive SPARQL-style keyword followed by whitespace.
  bool keyword(std::string_view word) {
    auto rest = cur_.rest();
    if (rest.size() <= word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(rest[i])) != word[i]) return false;
    }
    char after = rest[word.size()];
    if (after != ' ' && after != '\t' && after != '\n' && after != '\r') return false;
    for (std::size_t i = 0; i < word.size(); ++i) cur_.advance();
    return true;
  }

  void prefixDecl() {
    cur_.skipSpace(true);
    std::string prefix;
    while (!cur_.atEnd() && cur_.peek() != ':') {
      char c = cur_.peek();
      if (!isNameChar(c) && c != '.') cur_.fail("invalid prefix name" + cur_.describeHere());
      prefix += cur_.advance();
    }
    cur_.expect(':', "after prefix name");
    cur_.skipSpace(true);
    prefixes_.bind(prefix, resolve(cur_.readIriRef()));
  }

  void baseDecl() {
    cur_.skipSpace(true);
    prefixes_.setBase(resolve(cur_.readIriRef()));
  }

  std::string resolve(const std::string& ref) {
    if (isAbsoluteIri(ref)) return ref;
    if (!prefixes_.base()) cur_.fail("relative IRI <" + ref + "> with no base IRI");
    auto resolved = resolveIri(ref, *prefixes_.base());
    if (!resolved) cur_.fail("unsupported relative IRI reference <" + ref + ">");
    return *resolved;
  }

  void triples() {
    if (cur_.peek() == '[') {
      Term node = blankPropertyList();
      cur_.skipSpace(true);
      if (cur_.peek() != '.') predicateObjectList(node);
      return;
    }
    Term subj = subject();
    cur_.skipSpace(true);
    predicateObjectList(subj);
  }

  Term subject() {
    char c = cur_.peek();
    if (c == '<') return Term::iri(resolve(cur_.readIriRef()));
    if (c == '_' && cur_.peek(1) == ':') return blankLabel();
    if (c == '(') return collection();
    if (c == '"' || c == '\'' || std::isdigit(static_cast<unsigned char>(c))) {
      cur_.fail("a literal cannot be a subject", DiagnosticKind::Invariant);
    }
    return Term::iri(prefixedName());
  }

  Term blankLabel() {
    cur_.consume("_:");
    return blanks_.named(cur_.readBlankLabel());
  }

  void predicateObjectList(const Term& subj) {
    while (true) {
      cur_.skipSpace(true);
      Term pred = verb();
      objectList(subj, pred);
      cur_.skipSpace(true);
      if (!cur_.consume(';')) return;
      cur_.skipSpace(true);
      while (cur_.consume(';')) cur_.skipSpace(true);
      char c = cur_.peek();
      if (c == '.' || c == ']' || cur_.atEnd()) return;
    }
  }

  Term verb() {
    if (cur_.peek() == 'a' && !isNameChar(cur_.peek(1)) && cur_.peek(1) != ':' &&
        cur_.peek(1) != '.') {
      cur_.advance();
      return Term::iri(vocab::kType);
    }
    char c = cur_.peek();
    if (c == '<') return Term::iri(resolve(cur_.readIriRef()));
    if (c == '_' || c == '"' || c == '\'' || c == '[' || c == '(') {
      cur_.fail("predicate must be an IRI", DiagnosticKind::Invariant);
    }
    return Term::iri(prefixedName());
  }

  void objectList(const Term& subj, const Term& pred) {
    while (true) {
      cur_.skipSpace(true);
      Term obj = object();
      emit(subj, pred, std::move(obj));
      cur_.skipSpace(true);
      if (!cur_.consume(',')) return;
    }
  }

  Term object() {
    char c = cur_.peek();
    if (c == '<') return Term::iri(resolve(cur_.readIriRef()));
    if (c == '_' && cur_.peek(1) == ':') return blankLabel();
    if (c == '(') return collection();
    if (c == '[') return blankPropertyList();
    if (c == '"' || c == '\'') return literal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(cur_.peek(1))))) {
      return numeric();
    }
    for (std::string_view word : {"true", "false"}) {
      if (cur_.rest().starts_with(word) && !isNameChar(cur_.peek(word.size())) &&
          cur_.peek(word.size()) != ':') {
        cur_.consume(word);
        return Term::literal(std::string(word), vocab::kXsdBoolean);
      }
    }
    if (cur_.atEnd()) cur_.fail("expected an object, found end of input");
    return Term::iri(prefixedName());
  }

  Term literal() {
    std::string lexical = cur_.readQuoted();
    if (cur_.consume('@')) return Term::langLiteral(std::move(lexical), cur_.readLangTag());
    if (cur_.consume("^^")) {
      std::string datatype =
          cur_.peek() == '<' ? resolve(cur_.readIriRef()) : prefixedName();
      if (datatype == vocab::kLangString) {
        cur_.fail("rdf:langString literal without a language tag", DiagnosticKind::Invariant);
      }
      return Term::literal(std::move(lexical), std::move(datatype));
    }
    return Term::literal(std::move(lexical));
  }

  Term numeric() {
    std::string text;
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(cur_.peek())) && !cur_.atEnd()) {
        text += cur_.advance();
        ++n;
      }
      return n;
    };
    if (cur_.peek() == '+' || cur_.peek() == '-') text += cur_.advance();
    std::size_t intDigits = digits();
    bool decimal = false;
    if (cur_.peek() == '.' && std::isdigit(static_cast<unsigned char>(cur_.peek(1)))) {
      text += cur_.advance();
      digits();
      decimal = true;
    }
    bool exponent = false;
    if (cur_.peek() == 'e' || cur_.peek() == 'E') {
      text += cur_.advance();
      if (cur_.peek() == '+' || cur_.peek() == '-') text += cur_.advance();
      if (digits() == 0) cur_.fail("malformed exponent in numeric literal");
      exponent = true;
    }
    if (intDigits == 0 && !decimal) cur_.fail("malformed numeric literal");
    const std::string& type =
        exponent ? vocab::kXsdDouble : decimal ? vocab::kXsdDecimal : vocab::kXsdInteger;
    return Term::literal(std::move(text), type);
  }

  std::string prefixedName() {
    auto line = cur_.line();
    auto col = cur_.column();
    std::string prefix;
    while (!cur_.atEnd() && cur_.peek() != ':') {
      char c = cur_.peek();
      if (!isNameChar(c) && c != '.') {
        throw ParseError({line, col, "expected an IRI or prefixed name" + cur_.describeHere()});
      }
      prefix += cur_.advance();
    }
    if (!cur_.consume(':')) {
      throw ParseError({line, col, "expected an IRI or prefixed name, found end of input"});
    }
    std::string local;
    auto localChar = [&](bool first) {
      char c = cur_.peek();
      if (cur_.atEnd()) return false;
      if (isNameChar(c) || c == ':') return true;
      if (std::isdigit(static_cast<unsigned char>(c))) return true;
      if (!first && c == '.') return true;
      return c == '%' || c == '\\';
    };
    while (localChar(local.empty())) {
      char c = cur_.advance();
      if (c == '\\') {
        if (cur_.atEnd()) cur_.fail("dangling escape in local name");
        local += cur_.advance();
      } else {
        local += c;
      }
    }
    // Trailing dots belong to the statement terminator.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      cur_.unread();
    }
    auto ns = prefixes_.lookup(prefix);
    if (!ns) throw ParseError({line, col, "undeclared prefix '" + prefix + ":'"});
    return *ns + local;
  }

  Term collection() {
    cur_.expect('(', "to open a collection");
    std::vector<Term> items;
    while (true) {
      cur_.skipSpace(true);
      if (cur_.consume(')')) break;
      if (cur_.atEnd()) cur_.fail("unterminated collection");
      items.push_back(object());
    }
    if (items.empty()) return Term::iri(vocab::kNil);
    Term head = blanks_.fresh();
    Term cell = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(cell, Term::iri(vocab::kFirst), items[i]);
      Term next = i + 1 < items.size() ? blanks_.fresh() : Term::iri(vocab::kNil);
      emit(cell, Term::iri(vocab::kRest), next);
      cell = std::move(next);
    }
    return head;
  }

  Term blankPropertyList() {
    cur_.expect('[', "to open a blank node");
    Term node = blanks_.fresh();
    cur_.skipSpace(true);
    if (cur_.consume(']')) return node;
    predicateObjectList(node);
    cur_.skipSpace(true);
    cur_.expect(']', "to close a blank node property list");
    return node;
  }

  void emit(const Term& s, const Term& p, Term o) {
    if (s.isLiteral()) cur_.fail("a literal cannot be a subject", DiagnosticKind::Invariant);
    out_.insert(rdf::Triple{s, p, std::move(o)});
  }

  Cursor cur_;
  const ParseOptions& options_;
  detail::BlankNamer blanks_;
  PrefixMap prefixes_;
  rdf::GraphBuilder out_;
};

}  // namespace

TurtleDocument parseTurtle(std::string_view text, const ParseOptions& options) {
  detail::checkDocumentSize(text, options.maxBytes);
  return TurtleParser(text, options).run();
}

}  // namespace opa::io
