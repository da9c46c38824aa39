#include <algorithm>
#include <map>

#include "opa/io/detail/BlankNamer.h"
#include "opa/io/detail/Cursor.h"
#include "opa/io/Iri.h"
#include "opa/io/RdfIo.h"
#include "opa/rdf/Vocabulary.h"

namespace opa::io {

using rdf::Term;
using rdf::Triple;

namespace {

class NTriplesParser {
 public:
  NTriplesParser(std::string_view text, const ParseOptions& options)
      : cur_(text), options_(options), blanks_(options.blankScope) {}

  rdf::Graph run() {
    rdf::GraphBuilder out;
    while (!cur_.atEnd()) {
      if (options_.deadline && (cur_.line() & 0xFF) == 0) options_.deadline->check();
      cur_.skipSpace(true, false);
      if (cur_.consume('\n')) continue;
      if (cur_.atEnd()) break;

      Term s = subject();
      cur_.skipSpace(false, false);
      Term p = iri();
      cur_.skipSpace(false, false);
      Term o = object();
      cur_.skipSpace(false, false);
      cur_.expect('.', "at end of triple");
      cur_.skipSpace(true, false);
      if (!cur_.atEnd() && !cur_.consume('\n')) {
        cur_.fail("unexpected content after triple" + cur_.describeHere());
      }
      out.insert(Triple{std::move(s), std::move(p), std::move(o)});
    }
    return std::move(out).build();
  }

 private:
  Term iri() {
    if (cur_.peek() != '<') cur_.fail("expected an IRI" + cur_.describeHere());
    std::string text = cur_.readIriRef();
    if (!isAbsoluteIri(text)) cur_.fail("relative IRI <" + text + "> in N-Triples");
    return Term::iri(std::move(text));
  }

  Term subject() {
    if (cur_.consume("_:")) return blanks_.named(cur_.readBlankLabel());
    if (cur_.peek() == '"') cur_.fail("a literal cannot be a subject", DiagnosticKind::Invariant);
    return iri();
  }

  Term object() {
    if (cur_.consume("_:")) return blanks_.named(cur_.readBlankLabel());
    if (cur_.peek() != '"') return iri();
    std::string lexical = cur_.readQuoted();
    if (cur_.consume('@')) return Term::langLiteral(std::move(lexical), cur_.readLangTag());
    if (cur_.consume("^^")) return Term::literal(std::move(lexical), iri().value());
    return Term::literal(std::move(lexical));
  }

  detail::Cursor cur_;
  const ParseOptions& options_;
  detail::BlankNamer blanks_;
};

}  // namespace

rdf::Graph parseNTriples(std::string_view text, const ParseOptions& options) {
  detail::checkDocumentSize(text, options.maxBytes);
  return NTriplesParser(text, options).run();
}

std::string serializeNTriples(const rdf::Graph& graph) {
  // Order triples by their text with every blank node masked, breaking ties
  // by the original labels; then number blank nodes in that order.
  auto masked = [](const Term& t) { return t.isBlank() ? std::string("_:") : t.toNTriples(); };
  struct Row {
    std::string key;
    Triple triple;
  };
  std::vector<Row> rows;
  rows.reserve(graph.size());
  for (auto& t : graph.triples()) {
    std::string key = masked(t.subject) + ' ' + masked(t.predicate) + ' ' + masked(t.object);
    rows.push_back({std::move(key), std::move(t)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.key, a.triple) < std::tie(b.key, b.triple);
  });

  std::map<std::string, std::string> renamed;
  auto render = [&](const Term& t) {
    if (!t.isBlank()) return t.toNTriples();
    auto [it, inserted] = renamed.try_emplace(t.value());
    if (inserted) it->second = "_:b" + std::to_string(renamed.size() - 1);
    return it->second;
  };
  std::vector<std::string> lines;
  lines.reserve(rows.size());
  for (const auto& row : rows) {
    const auto& t = row.triple;
    std::string s = render(t.subject);
    std::string p = render(t.predicate);
    std::string o = render(t.object);
    lines.push_back(s + ' ' + p + ' ' + o + " .\n");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line;
  return out;
}

}  // namespace opa::io
