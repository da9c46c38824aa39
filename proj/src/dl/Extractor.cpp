#include "opa/dl/Extractor.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "opa/rdf/Vocabulary.h"
#include "opa/sparql/Evaluator.h"

namespace opa::dl {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;
using vocab::owl;
using vocab::rdf;
using vocab::rdfs;

namespace {

// Predicates that describe an anonymous class or role expression, a list
// cell, or part of a multi-triple construct. They never head an axiom on
// their own.
bool isDefinitionTriple(const Triple& t) {
  static const std::set<std::string> kAnySubject = {
      vocab::kFirst,           vocab::kRest,
      owl("members"),          owl("distinctMembers"),
      owl("sourceIndividual"), owl("assertionProperty"),
      owl("targetIndividual"), owl("targetValue")};
  static const std::set<std::string> kBlankSubject = {
      owl("intersectionOf"),          owl("unionOf"),
      owl("complementOf"),            owl("oneOf"),
      owl("onProperty"),              owl("someValuesFrom"),
      owl("allValuesFrom"),           owl("hasValue"),
      owl("hasSelf"),                 owl("minCardinality"),
      owl("maxCardinality"),          owl("cardinality"),
      owl("minQualifiedCardinality"), owl("maxQualifiedCardinality"),
      owl("qualifiedCardinality"),    owl("onClass"),
      owl("inverseOf")};
  const std::string& p = t.predicate.value();
  if (kAnySubject.count(p)) return true;
  return t.subject.isBlank() && kBlankSubject.count(p);
}

std::optional<RoleCharacteristic> characteristicFor(const std::string& iri) {
  static const std::pair<std::string, RoleCharacteristic> kTable[] = {
      {owl("ReflexiveProperty"), RoleCharacteristic::Refl},
      {owl("IrreflexiveProperty"), RoleCharacteristic::Irrefl},
      {owl("SymmetricProperty"), RoleCharacteristic::Sym},
      {owl("AsymmetricProperty"), RoleCharacteristic::Asym},
      {owl("TransitiveProperty"), RoleCharacteristic::Trans},
      {owl("FunctionalProperty"), RoleCharacteristic::Fn},
      {owl("InverseFunctionalProperty"), RoleCharacteristic::InvFn},
  };
  for (const auto& [name, kind] : kTable) {
    if (name == iri) return kind;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> cardinalityValue(const Term& t) {
  auto v = sparql::numericValue(t);
  if (!v || *v < 0 || std::floor(*v) != *v || *v > 1e18) return std::nullopt;
  return static_cast<std::uint64_t>(*v);
}

// Triples gathered while building one axiom; kept only if it succeeds.
using Scaffold = std::set<Triple>;

class Extractor {
 public:
  explicit Extractor(const Graph& g) : g_(g) {
    for (const auto& t : g_.match({std::nullopt, Term::iri(vocab::kType), std::nullopt})) {
      if (t.object.isIri() && t.object.value() == owl("AnnotationProperty")) {
        annotationProperties_.insert(t.subject);
      } else if (t.object.isIri() && t.object.value() == owl("Ontology")) {
        ontologyHeaders_.insert(t.subject);
      }
    }
  }

  ExtractionReport run() {
    ExtractionReport report;
    std::set<Triple> consumed;
    std::set<Triple> scaffolding;
    for (const Triple& t : g_.triples()) {
      if (isDefinitionTriple(t)) continue;
      Scaffold sc;
      Outcome outcome = classify(t, sc, report.axioms);
      if (outcome == Outcome::Axioms) {
        consumed.insert(t);
        scaffolding.insert(sc.begin(), sc.end());
      } else if (outcome == Outcome::Scaffolding) {
        scaffolding.insert(t);
      }
    }
    for (const Triple& t : g_.triples()) {
      if (consumed.count(t)) {
        report.consumed.push_back(t);
      } else if (scaffolding.count(t)) {
        report.scaffolding.push_back(t);
      } else {
        report.unmapped.push_back(t);
      }
    }
    report.letters = expressivityLetters(g_);
    return report;
  }

 private:
  enum class Outcome { Axioms, Scaffolding, Unmapped };

  std::vector<Triple> outgoing(const Term& s, const std::string& p) const {
    return g_.match({s, Term::iri(p), std::nullopt});
  }

  // First object of (s, p, ?) in canonical order, recording the triple.
  std::optional<Term> single(const Term& s, const std::string& p, Scaffold& sc) const {
    auto ts = outgoing(s, p);
    if (ts.empty()) return std::nullopt;
    sc.insert(ts.front());
    return ts.front().object;
  }

  std::vector<Term> readList(const Term& head, Scaffold& sc) const {
    std::vector<Term> items;
    std::set<Term> seen;
    Term cur = head;
    while (!(cur.isIri() && cur.value() == vocab::kNil)) {
      if (cur.isLiteral()) {
        throw ExtractionError("list starting at " + head.toNTriples() + " ends in a literal", head);
      }
      if (!seen.insert(cur).second) {
        throw ExtractionError("cyclic rdf:rest chain in list starting at " + head.toNTriples(),
                              head);
      }
      auto firsts = outgoing(cur, vocab::kFirst);
      auto rests = outgoing(cur, vocab::kRest);
      if (firsts.size() != 1 || rests.size() != 1) {
        throw ExtractionError("list starting at " + head.toNTriples() +
                                  " is not terminated by rdf:nil (cell " + cur.toNTriples() +
                                  " has " + std::to_string(firsts.size()) + " rdf:first and " +
                                  std::to_string(rests.size()) + " rdf:rest)",
                              head);
      }
      sc.insert(firsts.front());
      sc.insert(rests.front());
      items.push_back(firsts.front().object);
      cur = rests.front().object;
    }
    return items;
  }

  void declarations(const Term& node, Scaffold& sc) const {
    for (const auto& t : outgoing(node, vocab::kType)) {
      if (t.object.isIri() && vocab::isReserved(t.object.value())) sc.insert(t);
    }
  }

  std::optional<Role> roleOf(const Term& node, Scaffold& sc) {
    if (node.isLiteral()) return std::nullopt;
    if (node.isIri()) {
      const std::string& v = node.value();
      if (v == owl("topObjectProperty") || v == owl("topDataProperty")) return Role::universal();
      if (v == owl("bottomObjectProperty") || v == owl("bottomDataProperty")) return Role::empty();
      return Role::atomic(node);
    }
    if (!visiting_.insert(node).second) return std::nullopt;
    std::optional<Role> out;
    if (auto inner = single(node, owl("inverseOf"), sc)) {
      if (auto r = roleOf(*inner, sc)) out = Role::inverse(std::move(*r));
    } else {
      out = Role::atomic(node);
    }
    visiting_.erase(node);
    return out;
  }

  std::optional<std::vector<Concept>> concepts(const std::vector<Term>& nodes, Scaffold& sc) {
    std::vector<Concept> out;
    for (const auto& n : nodes) {
      auto c = conceptOf(n, sc);
      if (!c) return std::nullopt;
      out.push_back(std::move(*c));
    }
    return out;
  }

  // Concept for an intersectionOf / unionOf / complementOf / oneOf triple.
  std::optional<Concept> booleanExpression(const Triple& t, Scaffold& sc) {
    const std::string& p = t.predicate.value();
    if (p == owl("complementOf")) {
      auto c = conceptOf(t.object, sc);
      if (!c) return std::nullopt;
      return Concept::negation(std::move(*c));
    }
    auto items = readList(t.object, sc);
    if (p == owl("oneOf")) {
      if (items.empty()) return Concept::bottom();
      return Concept::nominal(std::move(items));
    }
    auto cs = concepts(items, sc);
    if (!cs) return std::nullopt;
    bool isAnd = p == owl("intersectionOf");
    if (cs->empty()) return isAnd ? Concept::top() : Concept::bottom();
    if (cs->size() == 1) return std::move(cs->front());
    return isAnd ? Concept::conjunction(std::move(*cs)) : Concept::disjunction(std::move(*cs));
  }

  std::optional<Concept> restriction(const Term& node, Scaffold& sc) {
    auto prop = single(node, owl("onProperty"), sc);
    if (!prop) return std::nullopt;
    auto r = roleOf(*prop, sc);
    if (!r) return std::nullopt;

    if (auto c = single(node, owl("someValuesFrom"), sc)) {
      auto filler = conceptOf(*c, sc);
      if (!filler) return std::nullopt;
      return Concept::exists(std::move(*r), std::move(*filler));
    }
    if (auto c = single(node, owl("allValuesFrom"), sc)) {
      auto filler = conceptOf(*c, sc);
      if (!filler) return std::nullopt;
      return Concept::forall(std::move(*r), std::move(*filler));
    }
    if (auto a = single(node, owl("hasValue"), sc)) return Concept::hasValue(std::move(*r), *a);
    if (auto self = single(node, owl("hasSelf"), sc)) {
      if (!self->isLiteral() || (self->value() != "true" && self->value() != "1")) {
        return std::nullopt;
      }
      return Concept::existsSelf(std::move(*r));
    }

    // Cardinalities. Qualified forms take their filler from owl:onClass.
    std::optional<Concept> filler;
    const char* const qualified[] = {"minQualifiedCardinality", "maxQualifiedCardinality",
                                     "qualifiedCardinality"};
    const char* const plain[] = {"minCardinality", "maxCardinality", "cardinality"};
    for (int q = 0; q < 2; ++q) {
      for (int k = 0; k < 3; ++k) {
        auto n = single(node, owl(q ? plain[k] : qualified[k]), sc);
        if (!n) continue;
        auto count = cardinalityValue(*n);
        if (!count) return std::nullopt;
        if (q == 0) {
          auto cls = single(node, owl("onClass"), sc);
          if (!cls) return std::nullopt;
          filler = conceptOf(*cls, sc);
          if (!filler) return std::nullopt;
        }
        if (k == 0) return Concept::atLeast(*count, std::move(*r), filler);
        if (k == 1) return Concept::atMost(*count, std::move(*r), filler);
        return Concept::conjunction({Concept::atMost(*count, *r, filler),
                                     Concept::atLeast(*count, *r, filler)});
      }
    }
    return std::nullopt;
  }

  std::optional<Concept> conceptOf(const Term& node, Scaffold& sc) {
    if (node.isLiteral()) return std::nullopt;
    if (node.isIri()) {
      if (node.value() == owl("Thing")) return Concept::top();
      if (node.value() == owl("Nothing")) return Concept::bottom();
      return Concept::atomic(node);
    }
    if (!visiting_.insert(node).second) return std::nullopt;
    std::optional<Concept> out;
    bool defined = false;
    for (const char* local : {"intersectionOf", "unionOf", "complementOf", "oneOf"}) {
      auto ts = outgoing(node, owl(local));
      if (ts.empty()) continue;
      defined = true;
      sc.insert(ts.front());
      out = booleanExpression(ts.front(), sc);
      break;
    }
    if (!defined && !outgoing(node, owl("onProperty")).empty()) {
      defined = true;
      out = restriction(node, sc);
    }
    if (!defined) {
      // A restriction key without owl:onProperty cannot be interpreted.
      for (const char* local : {"someValuesFrom", "allValuesFrom", "hasValue", "hasSelf",
                                "minCardinality", "maxCardinality", "cardinality",
                                "minQualifiedCardinality", "maxQualifiedCardinality",
                                "qualifiedCardinality", "onClass"}) {
        if (!outgoing(node, owl(local)).empty()) defined = true;
      }
      if (!defined) out = Concept::atomic(node);
    }
    if (out) declarations(node, sc);
    visiting_.erase(node);
    return out;
  }

  Outcome emit(std::vector<Axiom>& out, std::vector<Axiom> axioms) {
    if (axioms.empty()) return Outcome::Unmapped;
    for (auto& a : axioms) out.push_back(std::move(a));
    return Outcome::Axioms;
  }

  template <class T, class Fn>
  static std::vector<Axiom> pairwise(const std::vector<T>& items, Fn&& make) {
    std::vector<Axiom> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = i + 1; j < items.size(); ++j) out.push_back(make(items[i], items[j]));
    }
    return out;
  }

  Outcome typeAssertion(const Triple& t, Scaffold& sc, std::vector<Axiom>& out) {
    const Term& s = t.subject;
    const Term& o = t.object;
    if (o.isLiteral()) return Outcome::Unmapped;
    if (o.isIri()) {
      const std::string& cls = o.value();
      if (cls == owl("Thing")) return emit(out, {Axiom::conceptAssert(Concept::top(), s)});
      if (auto kind = characteristicFor(cls)) {
        auto r = roleOf(s, sc);
        if (!r) return Outcome::Unmapped;
        return emit(out, {Axiom::roleProperty(*kind, {std::move(*r)})});
      }
      if (cls == owl("NegativePropertyAssertion")) {
        auto source = single(s, owl("sourceIndividual"), sc);
        auto prop = single(s, owl("assertionProperty"), sc);
        auto target = single(s, owl("targetIndividual"), sc);
        if (!target) target = single(s, owl("targetValue"), sc);
        if (!source || !prop || !target) return Outcome::Unmapped;
        auto r = roleOf(*prop, sc);
        if (!r) return Outcome::Unmapped;
        return emit(out, {Axiom::negRoleAssert(std::move(*r), *source, *target)});
      }
      if (cls == owl("AllDisjointClasses") || cls == owl("AllDisjointProperties") ||
          cls == owl("AllDifferent")) {
        auto list = single(s, owl("members"), sc);
        if (!list && cls == owl("AllDifferent")) list = single(s, owl("distinctMembers"), sc);
        if (!list) return Outcome::Unmapped;
        auto items = readList(*list, sc);
        if (cls == owl("AllDifferent")) {
          return emit(out, pairwise(items, [](const Term& a, const Term& b) {
                        return Axiom::differentIndividuals(a, b);
                      }));
        }
        if (cls == owl("AllDisjointProperties")) {
          std::vector<Role> roles;
          for (const auto& i : items) {
            auto r = roleOf(i, sc);
            if (!r) return Outcome::Unmapped;
            roles.push_back(std::move(*r));
          }
          return emit(out, pairwise(roles, [](const Role& a, const Role& b) {
                        return Axiom::roleProperty(RoleCharacteristic::Disj, {a, b});
                      }));
        }
        auto cs = concepts(items, sc);
        if (!cs) return Outcome::Unmapped;
        return emit(out, pairwise(*cs, [](const Concept& a, const Concept& b) {
                      return Axiom::conceptSub(a, Concept::negation(b));
                    }));
      }
      if (vocab::isReserved(cls)) return Outcome::Scaffolding;
    }
    auto c = conceptOf(o, sc);
    if (!c) return Outcome::Unmapped;
    return emit(out, {Axiom::conceptAssert(std::move(*c), s)});
  }

  Outcome classify(const Triple& t, Scaffold& sc, std::vector<Axiom>& out) {
    const std::string& p = t.predicate.value();
    const Term& s = t.subject;
    const Term& o = t.object;

    if (p == vocab::kType) return typeAssertion(t, sc, out);
    if (ontologyHeaders_.count(s) || annotationProperties_.count(t.predicate)) {
      return Outcome::Unmapped;
    }

    auto twoConcepts = [&](auto make) {
      auto c = conceptOf(s, sc);
      auto d = conceptOf(o, sc);
      if (!c || !d) return Outcome::Unmapped;
      return emit(out, {make(std::move(*c), std::move(*d))});
    };
    auto twoRoles = [&](auto make) {
      auto r = roleOf(s, sc);
      auto q = roleOf(o, sc);
      if (!r || !q) return Outcome::Unmapped;
      return emit(out, {make(std::move(*r), std::move(*q))});
    };

    if (p == rdfs("subClassOf")) return twoConcepts(Axiom::conceptSub);
    if (p == owl("equivalentClass")) return twoConcepts(Axiom::conceptEquiv);
    if (p == owl("disjointWith")) {
      return twoConcepts([](Concept c, Concept d) {
        return Axiom::conceptSub(std::move(c), Concept::negation(std::move(d)));
      });
    }
    if (p == owl("intersectionOf") || p == owl("unionOf") || p == owl("complementOf") ||
        p == owl("oneOf")) {
      auto c = booleanExpression(t, sc);
      if (!c || s.isLiteral()) return Outcome::Unmapped;
      return emit(out, {Axiom::conceptEquiv(Concept::atomic(s), std::move(*c))});
    }
    if (p == owl("disjointUnionOf")) {
      auto cs = concepts(readList(o, sc), sc);
      if (!cs || cs->empty()) return Outcome::Unmapped;
      std::vector<Axiom> axioms;
      Concept whole = cs->size() == 1 ? cs->front() : Concept::disjunction(*cs);
      axioms.push_back(Axiom::conceptEquiv(Concept::atomic(s), std::move(whole)));
      for (auto& a : pairwise(*cs, [](const Concept& a, const Concept& b) {
             return Axiom::conceptSub(a, Concept::negation(b));
           })) {
        axioms.push_back(std::move(a));
      }
      return emit(out, std::move(axioms));
    }
    if (p == owl("sameAs")) {
      if (o.isLiteral()) return Outcome::Unmapped;
      return emit(out, {Axiom::sameIndividual(s, o)});
    }
    if (p == owl("differentFrom")) {
      if (o.isLiteral()) return Outcome::Unmapped;
      return emit(out, {Axiom::differentIndividuals(s, o)});
    }
    if (p == rdfs("subPropertyOf") || p == owl("subPropertyOf")) return twoRoles(Axiom::roleSub);
    if (p == owl("equivalentProperty")) return twoRoles(Axiom::roleEquiv);
    if (p == owl("propertyDisjointWith") || p == owl("PropertyDisjointWith")) {
      return twoRoles([](Role r, Role q) {
        return Axiom::roleProperty(RoleCharacteristic::Disj, {std::move(r), std::move(q)});
      });
    }
    if (p == owl("inverseOf")) {
      return twoRoles([](Role r, Role q) { return Axiom::roleEquiv(std::move(r), Role::inverse(std::move(q))); });
    }
    if (p == owl("propertyChainAxiom")) {
      auto super = roleOf(s, sc);
      if (!super) return Outcome::Unmapped;
      std::vector<Role> chain;
      for (const auto& item : readList(o, sc)) {
        auto r = roleOf(item, sc);
        if (!r) return Outcome::Unmapped;
        chain.push_back(std::move(*r));
      }
      if (chain.empty()) return Outcome::Unmapped;
      if (chain.size() == 1) return emit(out, {Axiom::roleSub(std::move(chain.front()), *super)});
      return emit(out, {Axiom::chainSub(std::move(chain), std::move(*super))});
    }
    if (p == rdfs("domain")) {
      auto r = roleOf(s, sc);
      auto c = conceptOf(o, sc);
      if (!r || !c) return Outcome::Unmapped;
      return emit(out, {Axiom::conceptSub(Concept::exists(std::move(*r), Concept::top()),
                                          std::move(*c))});
    }
    if (p == rdfs("range")) {
      auto r = roleOf(s, sc);
      auto c = conceptOf(o, sc);
      if (!r || !c) return Outcome::Unmapped;
      return emit(out, {Axiom::conceptSub(Concept::top(),
                                          Concept::forall(std::move(*r), std::move(*c)))});
    }
    if (vocab::isReserved(p)) return Outcome::Unmapped;
    return emit(out, {Axiom::roleAssert(Role::atomic(t.predicate), s, o)});
  }

  const Graph& g_;
  std::set<Term> annotationProperties_;
  std::set<Term> ontologyHeaders_;
  std::set<Term> visiting_;
};

}  // namespace

ExtractionReport extractAxioms(const Graph& graph) { return Extractor(graph).run(); }

}  // namespace opa::dl
