#include "opa/dl/Expressivity.h"

#include <algorithm>

#include "opa/rdf/Vocabulary.h"

namespace opa::dl {

std::string_view letterName(Letter letter) {
  switch (letter) {
    case Letter::AL: return "AL";
    case Letter::C: return "C";
    case Letter::S: return "S";
    case Letter::H: return "H";
    case Letter::O: return "O";
    case Letter::I: return "I";
    case Letter::F: return "F";
    case Letter::N: return "N";
    case Letter::Q: return "Q";
    case Letter::R: return "R";
    case Letter::D: return "D";
  }
  return "?";
}

namespace {

bool hasPredicate(const rdf::Graph& g, const std::string& iri) {
  auto id = g.lookup(rdf::Term::iri(iri));
  return id && !g.scan({std::nullopt, *id, std::nullopt}).empty();
}

bool hasObject(const rdf::Graph& g, const std::string& iri) {
  auto id = g.lookup(rdf::Term::iri(iri));
  return id && !g.scan({std::nullopt, std::nullopt, *id}).empty();
}

bool anyPredicate(const rdf::Graph& g, std::initializer_list<std::string> iris) {
  return std::any_of(iris.begin(), iris.end(), [&](const auto& i) { return hasPredicate(g, i); });
}

bool anyObject(const rdf::Graph& g, std::initializer_list<std::string> iris) {
  return std::any_of(iris.begin(), iris.end(), [&](const auto& i) { return hasObject(g, i); });
}

}  // namespace

LetterSet expressivityLetters(const rdf::Graph& g) {
  using vocab::owl;
  using vocab::rdfs;
  LetterSet out{Letter::AL};
  if (anyPredicate(g, {owl("complementOf"), owl("unionOf"), owl("someValuesFrom")})) {
    out.insert(Letter::C);
    if (hasObject(g, owl("TransitiveProperty"))) out.insert(Letter::S);
  }
  if (anyPredicate(g, {rdfs("subPropertyOf"), owl("subPropertyOf")})) out.insert(Letter::H);
  if (anyPredicate(g, {owl("oneOf"), owl("hasValue")})) out.insert(Letter::O);
  if (hasPredicate(g, owl("inverseOf"))) out.insert(Letter::I);
  if (anyObject(g, {owl("FunctionalProperty"), owl("InverseFunctionalProperty")})) {
    out.insert(Letter::F);
  }
  if (anyPredicate(g, {owl("onClass"), owl("qualifiedCardinality"), owl("minQualifiedCardinality"),
                       owl("maxQualifiedCardinality")})) {
    out.insert(Letter::Q);
  } else if (anyPredicate(g, {owl("minCardinality"), owl("maxCardinality"), owl("cardinality")})) {
    out.insert(Letter::N);
  }
  if (anyPredicate(g, {owl("propertyChainAxiom"), owl("hasSelf"), owl("propertyDisjointWith"),
                       owl("PropertyDisjointWith")}) ||
      anyObject(g, {owl("ReflexiveProperty"), owl("IrreflexiveProperty"),
                    owl("AsymmetricProperty")})) {
    out.insert(Letter::R);
  }
  auto occurs = [&](const std::string& iri) {
    auto id = g.lookup(rdf::Term::iri(iri));
    return id.has_value();
  };
  if (occurs(rdfs("Datatype")) || occurs(owl("DatatypeProperty"))) out.insert(Letter::D);
  return out;
}

std::vector<std::string> letterNames(const LetterSet& letters) {
  std::vector<std::string> out;
  for (Letter l : letters) out.emplace_back(letterName(l));
  return out;
}

std::string familyName(const LetterSet& letters) {
  auto has = [&](Letter l) { return letters.count(l) > 0; };
  std::string out = has(Letter::S) ? "S" : has(Letter::C) ? "ALC" : "AL";
  for (Letter l : {Letter::H, Letter::O, Letter::I, Letter::F, Letter::N, Letter::Q, Letter::R}) {
    if (has(l)) out += letterName(l);
  }
  if (has(Letter::D)) out += "(D)";
  return out;
}

}  // namespace opa::dl
