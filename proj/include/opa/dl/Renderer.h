#pragma once

#include <string>

#include "opa/dl/Ast.h"
#include "opa/io/PrefixMap.h"

namespace opa::dl {

struct RenderOptions {
  /// Plain ASCII operators (<=, ==, AND, OR, NOT, FORALL, EXISTS, ...).
  bool ascii = false;
  /// Names in the empty-prefix namespace render bare, other known
  /// namespaces as `p:local`, everything else as `<iri>`.
  const io::PrefixMap* prefixes = nullptr;
};

std::string render(const Concept& c, const RenderOptions& options = {});
std::string render(const Role& r, const RenderOptions& options = {});
std::string render(const Axiom& a, const RenderOptions& options = {});
std::string renderTerm(const rdf::Term& t, const RenderOptions& options = {});

}  // namespace opa::dl
