#include "opa/profile/Checker.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "opa/profile/EmbeddedQuery.h"
#include "opa/rdf/Vocabulary.h"
#include "opa/sparql/QueryParser.h"

namespace opa::profile {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;
using rdf::TriplePattern;

std::string normalizeQueryText(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.pop_back();
    }
    lines.push_back(std::move(line));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

const sparql::AlgebraPtr& embeddedQuery() {
  static const sparql::AlgebraPtr query = sparql::parseQuery(embeddedQueryText());
  return query;
}

std::string_view ruleName(RuleId rule) {
  switch (rule) {
    case RuleId::R1_EXISTENTIAL_MISPLACED: return "R1_EXISTENTIAL_MISPLACED";
    case RuleId::R2_UNIVERSAL_MISPLACED: return "R2_UNIVERSAL_MISPLACED";
    case RuleId::R3_MINCARD: return "R3_MINCARD";
    case RuleId::R4_DATATYPE: return "R4_DATATYPE";
    case RuleId::R5_QUALIFIED: return "R5_QUALIFIED";
    case RuleId::R6_EXACT_CARD: return "R6_EXACT_CARD";
    case RuleId::R7_MAX_CARD: return "R7_MAX_CARD";
  }
  return "?";
}

std::optional<RuleId> parseRuleName(std::string_view name) {
  for (RuleId r : kAllRules) {
    std::string_view full = ruleName(r);
    if (name == full || name == full.substr(0, full.find('_'))) return r;
  }
  return std::nullopt;
}

std::string_view engineName(Engine engine) { return engine == Engine::Direct ? "direct" : "query"; }

std::vector<RuleId> Verdict::rulesFired() const {
  std::vector<RuleId> out;
  for (const auto& v : violations) out.push_back(v.rule);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RuleId ruleForQueryArm(std::size_t arm) {
  static constexpr RuleId kArms[] = {
      RuleId::R1_EXISTENTIAL_MISPLACED, RuleId::R2_UNIVERSAL_MISPLACED, RuleId::R3_MINCARD,
      RuleId::R4_DATATYPE,              RuleId::R4_DATATYPE,            RuleId::R5_QUALIFIED,
      RuleId::R6_EXACT_CARD,            RuleId::R7_MAX_CARD};
  if (arm >= std::size(kArms)) throw std::out_of_range("query arm " + std::to_string(arm));
  return kArms[arm];
}

namespace {

std::string_view ruleSummary(RuleId rule) {
  switch (rule) {
    case RuleId::R1_EXISTENTIAL_MISPLACED:
      return "existential restriction outside the left side of a subsumption";
    case RuleId::R2_UNIVERSAL_MISPLACED:
      return "universal restriction outside the right side of a subsumption";
    case RuleId::R3_MINCARD:
      return "minimum cardinality outside the left side of a subsumption or greater than 1";
    case RuleId::R4_DATATYPE: return "datatype";
    case RuleId::R5_QUALIFIED: return "qualified cardinality restriction";
    case RuleId::R6_EXACT_CARD: return "exact cardinality restriction";
    case RuleId::R7_MAX_CARD: return "maximum cardinality restriction";
  }
  return "?";
}

std::string shortName(const std::string& iri) {
  for (auto [ns, prefix] : {std::pair{vocab::kRdfNs, "rdf:"}, std::pair{vocab::kRdfsNs, "rdfs:"},
                            std::pair{vocab::kOwlNs, "owl:"}, std::pair{vocab::kXsdNs, "xsd:"}}) {
    if (iri.starts_with(ns)) return prefix + iri.substr(ns.size());
  }
  return "<" + iri + ">";
}

std::string joinReasons(const std::vector<std::string>& reasons) {
  std::string out;
  for (const auto& r : reasons) {
    if (!out.empty()) out += "; ";
    out += r;
  }
  return out;
}

void appendUnique(std::vector<Triple>& out, const std::vector<Triple>& more) {
  for (const auto& t : more) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
}

std::vector<Term> subjectsOf(const Graph& g, const std::string& predicate) {
  std::vector<Term> out;
  for (const auto& t : g.match({std::nullopt, Term::iri(predicate), std::nullopt})) {
    if (out.empty() || out.back() != t.subject) out.push_back(t.subject);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Conditions shared by existential and minimum-cardinality restrictions:
// the node is the subclass of some subsumption, occurs as no object, and
// takes part in no equivalence or disjointness axiom.
void checkLeftPlacement(const Graph& g, const Term& x, std::vector<Triple>& evidence,
                        std::vector<std::string>& reasons) {
  if (g.match({x, Term::iri(vocab::rdfs("subClassOf")), std::nullopt}).empty()) {
    reasons.push_back("not the subclass of any rdfs:subClassOf axiom");
  }
  auto asObject = g.match({std::nullopt, std::nullopt, x});
  if (!asObject.empty()) {
    reasons.push_back("used as the object of " + std::to_string(asObject.size()) + " triple(s)");
    appendUnique(evidence, asObject);
  }
  for (const char* local : {"equivalentClass", "disjointWith", "members", "disjointUnionOf"}) {
    auto axioms = g.match({x, Term::iri(vocab::owl(local)), std::nullopt});
    if (!axioms.empty()) {
      reasons.push_back(std::string("subject of owl:") + local);
      appendUnique(evidence, axioms);
    }
  }
}

class DirectChecker {
 public:
  DirectChecker(const Graph& g, const CheckOptions& options) : g_(g), options_(options) {}

  std::vector<Violation> run() {
    existential();
    universal();
    minCardinality();
    singleTriple(RuleId::R4_DATATYPE,
                 {std::nullopt, std::nullopt, Term::iri(vocab::owl("DatatypeProperty"))});
    singleTriple(RuleId::R4_DATATYPE,
                 {std::nullopt, std::nullopt, Term::iri(vocab::rdfs("Datatype"))});
    for (const char* local :
         {"onClass", "qualifiedCardinality", "minQualifiedCardinality", "maxQualifiedCardinality"}) {
      singleTriple(RuleId::R5_QUALIFIED, {std::nullopt, Term::iri(vocab::owl(local)), std::nullopt});
    }
    singleTriple(RuleId::R6_EXACT_CARD,
                 {std::nullopt, Term::iri(vocab::owl("cardinality")), std::nullopt});
    singleTriple(RuleId::R7_MAX_CARD,
                 {std::nullopt, Term::iri(vocab::owl("maxCardinality")), std::nullopt});

    std::sort(out_.begin(), out_.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.rule, a.focus, a.evidence) < std::tie(b.rule, b.focus, b.evidence);
    });
    return std::move(out_);
  }

 private:
  void tick() {
    if (options_.deadline) options_.deadline->check();
  }

  void existential() {
    const std::string svf = vocab::owl("someValuesFrom");
    for (const Term& x : subjectsOf(g_, svf)) {
      tick();
      std::vector<Triple> evidence = g_.match({x, Term::iri(svf), std::nullopt});
      std::vector<std::string> reasons;
      checkLeftPlacement(g_, x, evidence, reasons);
      if (!reasons.empty()) add(RuleId::R1_EXISTENTIAL_MISPLACED, x, std::move(evidence), reasons);
    }
  }

  void universal() {
    const std::string avf = vocab::owl("allValuesFrom");
    const Term subClassOf = Term::iri(vocab::rdfs("subClassOf"));
    const Term domain = Term::iri(vocab::rdfs("domain"));
    const Term allowedAsSubject[] = {Term::iri(vocab::kType), Term::iri(vocab::owl("onProperty")),
                                     Term::iri(avf)};
    for (const Term& x : subjectsOf(g_, avf)) {
      tick();
      std::vector<Triple> evidence = g_.match({x, Term::iri(avf), std::nullopt});
      std::vector<std::string> reasons;
      for (const auto& t : g_.match({std::nullopt, std::nullopt, x})) {
        if (t.predicate == subClassOf || t.predicate == domain) continue;
        reasons.push_back("object of " + shortName(t.predicate.value()));
        evidence.push_back(t);
      }
      for (const auto& t : g_.match({x, std::nullopt, std::nullopt})) {
        if (std::find(std::begin(allowedAsSubject), std::end(allowedAsSubject), t.predicate) !=
            std::end(allowedAsSubject)) {
          continue;
        }
        reasons.push_back("subject of " + shortName(t.predicate.value()));
        evidence.push_back(t);
      }
      reasons.erase(std::unique(reasons.begin(), reasons.end()), reasons.end());
      if (!reasons.empty()) add(RuleId::R2_UNIVERSAL_MISPLACED, x, std::move(evidence), reasons);
    }
  }

  void minCardinality() {
    const std::string minCard = vocab::owl("minCardinality");
    for (const Term& x : subjectsOf(g_, minCard)) {
      tick();
      std::vector<Triple> evidence = g_.match({x, Term::iri(minCard), std::nullopt});
      std::vector<std::string> reasons;
      for (const auto& t : evidence) {
        auto n = sparql::numericValue(t.object);
        if (!n) {
          reasons.push_back("unreadable cardinality " + t.object.toNTriples());
        } else if (*n > 1) {
          reasons.push_back("cardinality " + t.object.value() + " is greater than 1");
        }
      }
      checkLeftPlacement(g_, x, evidence, reasons);
      if (!reasons.empty()) add(RuleId::R3_MINCARD, x, std::move(evidence), reasons);
    }
  }

  void singleTriple(RuleId rule, const TriplePattern& pattern) {
    tick();
    for (const auto& t : g_.match(pattern)) {
      std::string what = pattern.object ? "uses " + shortName(pattern.object->value())
                                        : "uses " + shortName(pattern.predicate->value());
      add(rule, t.subject, {t}, {what});
    }
  }

  void add(RuleId rule, const Term& focus, std::vector<Triple> evidence,
           const std::vector<std::string>& reasons) {
    std::sort(evidence.begin(), evidence.end());
    out_.push_back({rule, focus, std::move(evidence),
                    std::string(ruleSummary(rule)) + ": " + joinReasons(reasons)});
  }

  const Graph& g_;
  const CheckOptions& options_;
  std::vector<Violation> out_;
};

std::vector<sparql::AlgebraPtr> queryArms() {
  sparql::AlgebraPtr node = embeddedQuery();
  while (true) {
    if (const auto* s = std::get_if<sparql::SelectAll>(&node->node)) {
      node = s->inner;
    } else if (const auto* l = std::get_if<sparql::Limit>(&node->node)) {
      node = l->inner;
    } else {
      break;
    }
  }
  return sparql::unionArms(node);
}

// Patterns whose matches make an arm succeed: everything not on the right
// side of a MINUS.
void positivePatterns(const sparql::Algebra& a, std::vector<sparql::QueryPattern>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, sparql::Bgp>) {
          out.insert(out.end(), n.patterns.begin(), n.patterns.end());
        } else if constexpr (std::is_same_v<T, sparql::Join> || std::is_same_v<T, sparql::Union>) {
          positivePatterns(*n.left, out);
          positivePatterns(*n.right, out);
        } else if constexpr (std::is_same_v<T, sparql::Minus>) {
          positivePatterns(*n.left, out);
        } else {
          positivePatterns(*n.inner, out);
        }
      },
      a.node);
}

std::optional<Term> instantiate(const sparql::PatternSlot& slot, const sparql::Solution& s) {
  if (const auto* v = std::get_if<sparql::Variable>(&slot)) {
    auto it = s.find(*v);
    if (it == s.end()) return std::nullopt;
    return it->second;
  }
  return std::get<Term>(slot);
}

}  // namespace

Verdict checkDirect(const Graph& graph, const CheckOptions& options) {
  Verdict v;
  v.engine = Engine::Direct;
  v.violations = DirectChecker(graph, options).run();
  v.member = v.violations.empty();
  return v;
}

Verdict checkQuery(const Graph& graph, const CheckOptions& options) {
  Verdict v;
  v.engine = Engine::Query;
  sparql::EvalOptions eval{options.stats, options.deadline};
  if (sparql::evaluate(graph, *embeddedQuery(), eval).empty()) return v;

  // Re-run the arms one at a time to find which clause fired.
  sparql::EvalOptions quiet{nullptr, options.deadline};
  auto arms = queryArms();
  for (std::size_t i = 0; i < arms.size(); ++i) {
    auto rows = sparql::evaluate(graph, *sparql::makeLimit(1, arms[i]), quiet);
    if (rows.empty()) continue;
    std::vector<sparql::QueryPattern> patterns;
    positivePatterns(*arms[i], patterns);
    std::vector<Triple> evidence;
    for (const auto& p : patterns) {
      auto s = instantiate(p.subject, rows.front());
      auto pr = instantiate(p.predicate, rows.front());
      auto o = instantiate(p.object, rows.front());
      if (!s || !pr || !o || s->isLiteral() || !pr->isIri()) continue;
      Triple t{*s, *pr, *o};
      if (graph.contains(t) && std::find(evidence.begin(), evidence.end(), t) == evidence.end()) {
        evidence.push_back(std::move(t));
      }
    }
    if (evidence.empty()) throw std::logic_error("query arm matched without evidence");
    RuleId rule = ruleForQueryArm(i);
    Term focus = evidence.front().subject;
    v.member = false;
    v.violations.push_back({rule, std::move(focus), std::move(evidence),
                            std::string(ruleSummary(rule)) + " (query clause " +
                                std::to_string(i + 1) + ")"});
    return v;
  }
  throw std::logic_error("query matched but no single clause did");
}

DualVerdict checkBoth(const Graph& graph, const CheckOptions& options) {
  DualVerdict out{checkDirect(graph, options), checkQuery(graph, options), false};
  out.divergence = out.direct.member != out.query.member;
  return out;
}

}  // namespace opa::profile
