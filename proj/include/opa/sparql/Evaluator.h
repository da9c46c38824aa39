#pragma once

#include <cstddef>
#include <optional>

#include "opa/rdf/Graph.h"
#include "opa/sparql/Algebra.h"
#include "opa/util/Deadline.h"

namespace opa::sparql {

/// Counters filled in during evaluation.
struct EvalStats {
  /// Index range lookups (Graph::scan calls).
  std::size_t probes = 0;
};

struct EvalOptions {
  EvalStats* stats = nullptr;
  /// Checked periodically; evaluation throws util::DeadlineExceeded.
  const util::Deadline* deadline = nullptr;
};

/// True iff every variable bound in both maps to the same term.
bool compatible(const Solution& a, const Solution& b);

/// Numeric value of a literal with an xsd numeric datatype, or of a plain
/// literal made only of digits.
std::optional<double> numericValue(const rdf::Term& term);

/// Evaluates `algebra` over `graph` with standard SPARQL semantics (multiset
/// results, strict FILTER scoping). Limit stops all upstream work as soon as
/// enough solutions are produced.
///
/// At most 64 distinct variables are supported; more throws
/// std::invalid_argument.
SolutionSequence evaluate(const rdf::Graph& graph, const Algebra& algebra,
                          const EvalOptions& options = {});

}  // namespace opa::sparql
