#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "opa/io/ParseError.h"
#include "opa/io/PrefixMap.h"
#include "opa/rdf/Graph.h"
#include "opa/util/Deadline.h"

namespace opa::io {

inline constexpr std::size_t kDefaultMaxDocumentBytes = 64u * 1024u * 1024u;

struct ParseOptions {
  /// Base IRI for relative references (Turtle only).
  std::optional<std::string> base;
  /// Namespace for blank node labels. Must not contain '.'. When empty a
  /// fresh process-unique scope is drawn, so two loads never share nodes.
  std::string blankScope;
  std::size_t maxBytes = kDefaultMaxDocumentBytes;
  const util::Deadline* deadline = nullptr;
};

struct TurtleDocument {
  rdf::Graph graph;
  PrefixMap prefixes;
};

/// Parses a Turtle document. Throws ParseError.
TurtleDocument parseTurtle(std::string_view text, const ParseOptions& options = {});

/// Parses an N-Triples document (one triple per line, absolute IRIs only).
/// Throws ParseError carrying the offending line.
rdf::Graph parseNTriples(std::string_view text, const ParseOptions& options = {});

/// Canonical N-Triples: sorted lines, blank nodes renamed `_:b0`, `_:b1`, ...
/// in order of first appearance. Set-equal graphs serialize byte-identically.
std::string serializeNTriples(const rdf::Graph& graph);

enum class Format { Turtle, NTriples, RdfXml, Unknown };

/// Guesses the serialization from the file extension, falling back to the
/// leading bytes of `content` (XML prolog / `<rdf:RDF` means RDF/XML,
/// anything else is tried as Turtle). `.owl` is always sniffed.
Format detectFormat(const std::filesystem::path& path, std::string_view content);
std::string_view formatName(Format f);

/// Parses `content` according to `format`. RDF/XML yields a ParseError that
/// tells the user to convert the file.
TurtleDocument parseDocument(std::string_view content, Format format,
                             const ParseOptions& options = {});

/// Unreadable file (missing, permission, directory).
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a whole file, or stdin for "-". Throws LoadError.
std::string readSource(const std::filesystem::path& path);

/// Reads a file (or stdin for "-") and parses it according to detectFormat.
/// Throws LoadError or ParseError.
TurtleDocument loadDocument(const std::filesystem::path& path, const ParseOptions& options = {});

}  // namespace opa::io
