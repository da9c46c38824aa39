#pragma once

#include <stdexcept>
#include <vector>

#include "opa/dl/Ast.h"
#include "opa/dl/Expressivity.h"
#include "opa/rdf/Graph.h"

namespace opa::dl {

/// An rdf:first/rdf:rest chain that loops or does not end in rdf:nil.
class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(const std::string& message, rdf::Term listHead)
      : std::runtime_error(message), listHead_(std::move(listHead)) {}
  const rdf::Term& listHead() const { return listHead_; }

 private:
  rdf::Term listHead_;
};

/// Every input triple lands in exactly one of `consumed` (the head triple
/// of an axiom), `scaffolding` (list cells, restriction definitions,
/// vocabulary declarations) or `unmapped`.
struct ExtractionReport {
  std::vector<Axiom> axioms;
  std::vector<rdf::Triple> consumed;
  std::vector<rdf::Triple> scaffolding;
  std::vector<rdf::Triple> unmapped;
  LetterSet letters;
};

/// Lifts the graph into DL axioms. Triples are visited in canonical order,
/// so the result does not depend on how the graph was built.
/// Throws ExtractionError for a cyclic or ill-terminated list.
ExtractionReport extractAxioms(const rdf::Graph& graph);

}  // namespace opa::dl
