#include "opa/io/RdfIo.h"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "opa/rdf/Vocabulary.h"

namespace opa::io {

std::string ParseDiagnostic::format() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

PrefixMap::PrefixMap() {
  map_.emplace("rdf", std::string(vocab::kRdfNs));
  map_.emplace("rdfs", std::string(vocab::kRdfsNs));
  map_.emplace("owl", std::string(vocab::kOwlNs));
  map_.emplace("xsd", std::string(vocab::kXsdNs));
}

std::optional<std::string> PrefixMap::lookup(std::string_view prefix) const {
  auto it = map_.find(prefix);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::string, std::string>> PrefixMap::shorten(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : map_) {
    const auto& ns = entry.second;
    if (ns.empty() || !iri.starts_with(ns)) continue;
    if (!best || ns.size() > best->second.size()) best = &entry;
  }
  if (!best) return std::nullopt;
  return std::pair(best->first, std::string(iri.substr(best->second.size())));
}

Format detectFormat(const std::filesystem::path& path, std::string_view content) {
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".ttl" || ext == ".turtle") return Format::Turtle;
  if (ext == ".nt") return Format::NTriples;
  if (ext == ".rdf" || ext == ".xml" || ext == ".owx") return Format::RdfXml;
  // .owl is used for RDF/XML and Turtle alike, so it falls through to sniffing.

  auto start = content.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  if (start == std::string_view::npos) return Format::Turtle;
  auto head = content.substr(start, 64);
  if (head.starts_with("<?xml") || head.starts_with("<rdf:RDF") || head.starts_with("<!DOCTYPE") ||
      head.starts_with("<Ontology")) {
    return Format::RdfXml;
  }
  return Format::Turtle;
}

std::string_view formatName(Format f) {
  switch (f) {
    case Format::Turtle: return "turtle";
    case Format::NTriples: return "ntriples";
    case Format::RdfXml: return "rdfxml";
    case Format::Unknown: break;
  }
  return "unknown";
}

TurtleDocument parseDocument(std::string_view content, Format format, const ParseOptions& options) {
  switch (format) {
    case Format::Turtle:
      return parseTurtle(content, options);
    case Format::NTriples:
      return {parseNTriples(content, options), PrefixMap{}};
    case Format::RdfXml:
      throw ParseError({1, 1,
                        "RDF/XML is not supported; convert the file to Turtle or N-Triples "
                        "(for example with `riot --output=turtle`)"});
    case Format::Unknown:
      break;
  }
  throw ParseError({1, 1, "unrecognized RDF serialization"});
}

std::string readSource(const std::filesystem::path& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw LoadError(path.string() + ": is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw LoadError(path.string() + ": read error");
  return buf.str();
}

TurtleDocument loadDocument(const std::filesystem::path& path, const ParseOptions& options) {
  std::string content = readSource(path);
  return parseDocument(content, detectFormat(path, content), options);
}

}  // namespace opa::io
