#pragma once

#include <string>
#include <string_view>

// IRIs of the RDF, RDFS, OWL and XSD vocabularies used across the toolchain.
namespace opa::vocab {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

inline std::string rdf(std::string_view local) { return std::string(kRdfNs) + std::string(local); }
inline std::string rdfs(std::string_view local) { return std::string(kRdfsNs) + std::string(local); }
inline std::string owl(std::string_view local) { return std::string(kOwlNs) + std::string(local); }
inline std::string xsd(std::string_view local) { return std::string(kXsdNs) + std::string(local); }

// Frequently compared IRIs, spelled out so they can be used as constants.
inline const std::string kType = rdf("type");
inline const std::string kFirst = rdf("first");
inline const std::string kRest = rdf("rest");
inline const std::string kNil = rdf("nil");
inline const std::string kLangString = rdf("langString");
inline const std::string kXsdString = xsd("string");
inline const std::string kXsdInteger = xsd("integer");
inline const std::string kXsdDecimal = xsd("decimal");
inline const std::string kXsdDouble = xsd("double");
inline const std::string kXsdBoolean = xsd("boolean");

/// True when `iri` lives in one of the rdf:, rdfs:, owl: or xsd: namespaces.
inline bool isReserved(std::string_view iri) {
  return iri.starts_with(kRdfNs) || iri.starts_with(kRdfsNs) || iri.starts_with(kOwlNs) ||
         iri.starts_with(kXsdNs);
}

}  // namespace opa::vocab
