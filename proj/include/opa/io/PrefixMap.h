#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace opa::io {

/// Prefix label to namespace IRI bindings, plus an optional base IRI.
/// rdf:, rdfs:, owl: and xsd: are always bound.
class PrefixMap {
 public:
  PrefixMap();

  void bind(std::string prefix, std::string ns) { map_[std::move(prefix)] = std::move(ns); }
  /// Namespace for `prefix`, or nullopt when undeclared.
  std::optional<std::string> lookup(std::string_view prefix) const;
  /// Longest-namespace match: (prefix, local name) for `iri`.
  std::optional<std::pair<std::string, std::string>> shorten(std::string_view iri) const;

  const std::optional<std::string>& base() const { return base_; }
  void setBase(std::string base) { base_ = std::move(base); }

  const std::map<std::string, std::string, std::less<>>& bindings() const { return map_; }

 private:
  std::map<std::string, std::string, std::less<>> map_;
  std::optional<std::string> base_;
};

}  // namespace opa::io
