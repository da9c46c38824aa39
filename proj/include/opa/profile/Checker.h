#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opa/rdf/Graph.h"
#include "opa/sparql/Evaluator.h"
#include "opa/util/Deadline.h"

namespace opa::profile {

enum class RuleId {
  R1_EXISTENTIAL_MISPLACED,
  R2_UNIVERSAL_MISPLACED,
  R3_MINCARD,
  R4_DATATYPE,
  R5_QUALIFIED,
  R6_EXACT_CARD,
  R7_MAX_CARD,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::R1_EXISTENTIAL_MISPLACED, RuleId::R2_UNIVERSAL_MISPLACED, RuleId::R3_MINCARD,
    RuleId::R4_DATATYPE,              RuleId::R5_QUALIFIED,           RuleId::R6_EXACT_CARD,
    RuleId::R7_MAX_CARD};

/// Stable identifier, e.g. "R4_DATATYPE".
std::string_view ruleName(RuleId rule);
/// Accepts the full identifier or its short form ("R4").
std::optional<RuleId> parseRuleName(std::string_view name);

enum class Engine { Direct, Query };
std::string_view engineName(Engine engine);

struct Violation {
  RuleId rule;
  /// The restriction node or offending subject.
  rdf::Term focus;
  /// Triples of the checked graph that trigger the rule; never empty.
  std::vector<rdf::Triple> evidence;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct Verdict {
  bool member = true;
  std::vector<Violation> violations;
  Engine engine = Engine::Direct;

  /// Distinct rules among the violations, in RuleId order.
  std::vector<RuleId> rulesFired() const;
};

struct DualVerdict {
  Verdict direct;
  Verdict query;
  bool divergence = false;
};

struct CheckOptions {
  const util::Deadline* deadline = nullptr;
  sparql::EvalStats* stats = nullptr;
};

/// Runs the embedded query. Member iff the result is empty; otherwise one
/// violation built from the first union arm that matches.
Verdict checkQuery(const rdf::Graph& graph, const CheckOptions& options = {});

/// Applies R1..R7 and reports every violation, sorted by rule, focus and
/// evidence.
Verdict checkDirect(const rdf::Graph& graph, const CheckOptions& options = {});

DualVerdict checkBoth(const rdf::Graph& graph, const CheckOptions& options = {});

/// Rule of the embedded query's union arm at `arm` (0-based).
RuleId ruleForQueryArm(std::size_t arm);

}  // namespace opa::profile
