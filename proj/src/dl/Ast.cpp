#include "opa/dl/Ast.h"

#include <stdexcept>

namespace opa::dl {

bool Role::operator==(const Role&) const = default;
bool Concept::operator==(const Concept&) const = default;

namespace {
Role wrapRole(RoleKind kind, std::vector<Role> operands) {
  Role r;
  r.kind = kind;
  r.operands = std::move(operands);
  return r;
}

Concept restriction(ConceptKind kind, Role r, std::optional<Concept> filler) {
  Concept c;
  c.kind = kind;
  c.roles.push_back(std::move(r));
  if (filler) c.operands.push_back(std::move(*filler));
  return c;
}
}  // namespace

Role Role::atomic(rdf::Term name) {
  if (name.isLiteral()) throw std::invalid_argument("a role name cannot be a literal");
  Role r;
  r.kind = RoleKind::Atomic;
  r.names.push_back(std::move(name));
  return r;
}
Role Role::universal() { return wrapRole(RoleKind::Universal, {}); }
Role Role::empty() { return wrapRole(RoleKind::Empty, {}); }
Role Role::inverse(Role r) { return wrapRole(RoleKind::Inverse, {std::move(r)}); }
Role Role::negation(Role r) { return wrapRole(RoleKind::Not, {std::move(r)}); }
Role Role::conjunction(Role r, Role s) { return wrapRole(RoleKind::And, {std::move(r), std::move(s)}); }
Role Role::disjunction(Role r, Role s) { return wrapRole(RoleKind::Or, {std::move(r), std::move(s)}); }
Role Role::chain(std::vector<Role> roles) {
  if (roles.size() < 2) throw std::invalid_argument("a role chain needs at least two roles");
  return wrapRole(RoleKind::Chain, std::move(roles));
}
Role Role::transClosure(Role r) { return wrapRole(RoleKind::TransClosure, {std::move(r)}); }
Role Role::reflTransClosure(Role r) { return wrapRole(RoleKind::ReflTransClosure, {std::move(r)}); }
Role Role::restrict(Role r, std::optional<Concept> left, std::optional<Concept> right) {
  Role out = wrapRole(RoleKind::Restrict, {std::move(r)});
  if (left) out.left.push_back(std::move(*left));
  if (right) out.right.push_back(std::move(*right));
  return out;
}
Role Role::identity(Concept c) {
  Role out = wrapRole(RoleKind::Id, {});
  out.right.push_back(std::move(c));
  return out;
}
Role Role::symmetric(Role r) { return wrapRole(RoleKind::Sym, {std::move(r)}); }

Concept Concept::atomic(rdf::Term name) {
  if (name.isLiteral()) throw std::invalid_argument("a concept name cannot be a literal");
  Concept c;
  c.kind = ConceptKind::Atomic;
  c.names.push_back(std::move(name));
  return c;
}
Concept Concept::top() { return Concept{}; }
Concept Concept::bottom() {
  Concept c;
  c.kind = ConceptKind::Bottom;
  return c;
}
Concept Concept::negation(Concept inner) {
  Concept c;
  c.kind = ConceptKind::Not;
  c.operands.push_back(std::move(inner));
  return c;
}
Concept Concept::conjunction(std::vector<Concept> cs) {
  if (cs.size() < 2) throw std::invalid_argument("an intersection needs at least two concepts");
  Concept c;
  c.kind = ConceptKind::And;
  c.operands = std::move(cs);
  return c;
}
Concept Concept::disjunction(std::vector<Concept> cs) {
  if (cs.size() < 2) throw std::invalid_argument("a union needs at least two concepts");
  Concept c;
  c.kind = ConceptKind::Or;
  c.operands = std::move(cs);
  return c;
}
Concept Concept::nominal(std::vector<rdf::Term> individuals) {
  if (individuals.empty()) throw std::invalid_argument("a nominal needs at least one individual");
  Concept c;
  c.kind = ConceptKind::Nominal;
  c.names = std::move(individuals);
  return c;
}
Concept Concept::exists(Role r, Concept filler) {
  return restriction(ConceptKind::Exists, std::move(r), std::move(filler));
}
Concept Concept::forall(Role r, Concept filler) {
  return restriction(ConceptKind::Forall, std::move(r), std::move(filler));
}
Concept Concept::existsSelf(Role r) {
  return restriction(ConceptKind::ExistsSelf, std::move(r), std::nullopt);
}
Concept Concept::hasValue(Role r, rdf::Term individual) {
  Concept c = restriction(ConceptKind::HasValue, std::move(r), std::nullopt);
  c.names.push_back(std::move(individual));
  return c;
}
Concept Concept::atMost(std::uint64_t n, Role r, std::optional<Concept> filler) {
  Concept c = restriction(ConceptKind::AtMost, std::move(r), std::move(filler));
  c.count = n;
  return c;
}
Concept Concept::atLeast(std::uint64_t n, Role r, std::optional<Concept> filler) {
  Concept c = restriction(ConceptKind::AtLeast, std::move(r), std::move(filler));
  c.count = n;
  return c;
}

namespace {
Axiom make(AxiomKind kind) {
  Axiom a;
  a.kind = kind;
  return a;
}
}  // namespace

Axiom Axiom::conceptEquiv(Concept c, Concept d) {
  Axiom a = make(AxiomKind::ConceptEquiv);
  a.concepts = {std::move(c), std::move(d)};
  return a;
}
Axiom Axiom::conceptSub(Concept c, Concept d) {
  Axiom a = make(AxiomKind::ConceptSub);
  a.concepts = {std::move(c), std::move(d)};
  return a;
}
Axiom Axiom::roleEquiv(Role r, Role s) {
  Axiom a = make(AxiomKind::RoleEquiv);
  a.roles = {std::move(r), std::move(s)};
  return a;
}
Axiom Axiom::roleSub(Role r, Role s) {
  Axiom a = make(AxiomKind::RoleSub);
  a.roles = {std::move(r), std::move(s)};
  return a;
}
Axiom Axiom::chainSub(std::vector<Role> chain, Role super) {
  Axiom a = make(AxiomKind::ChainSub);
  a.roles = {Role::chain(std::move(chain)), std::move(super)};
  return a;
}
Axiom Axiom::conceptAssert(Concept c, rdf::Term ind) {
  Axiom a = make(AxiomKind::ConceptAssert);
  a.concepts = {std::move(c)};
  a.individuals = {std::move(ind)};
  return a;
}
Axiom Axiom::negConceptAssert(Concept c, rdf::Term ind) {
  Axiom a = make(AxiomKind::NegConceptAssert);
  a.concepts = {std::move(c)};
  a.individuals = {std::move(ind)};
  return a;
}
Axiom Axiom::roleAssert(Role r, rdf::Term x, rdf::Term y) {
  Axiom a = make(AxiomKind::RoleAssert);
  a.roles = {std::move(r)};
  a.individuals = {std::move(x), std::move(y)};
  return a;
}
Axiom Axiom::negRoleAssert(Role r, rdf::Term x, rdf::Term y) {
  Axiom a = make(AxiomKind::NegRoleAssert);
  a.roles = {std::move(r)};
  a.individuals = {std::move(x), std::move(y)};
  return a;
}
Axiom Axiom::sameIndividual(rdf::Term x, rdf::Term y) {
  Axiom a = make(AxiomKind::SameIndividual);
  a.individuals = {std::move(x), std::move(y)};
  return a;
}
Axiom Axiom::differentIndividuals(rdf::Term x, rdf::Term y) {
  Axiom a = make(AxiomKind::DifferentIndividuals);
  a.individuals = {std::move(x), std::move(y)};
  return a;
}
Axiom Axiom::roleProperty(RoleCharacteristic kind, std::vector<Role> roles) {
  std::size_t want = kind == RoleCharacteristic::Disj ? 2 : 1;
  if (roles.size() != want) {
    throw std::invalid_argument("role characteristic " + std::string(characteristicName(kind)) +
                                " takes " + std::to_string(want) + " role(s)");
  }
  Axiom a = make(AxiomKind::RoleProperty);
  a.characteristic = kind;
  a.roles = std::move(roles);
  return a;
}

std::string_view axiomKindName(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::ConceptEquiv: return "ConceptEquiv";
    case AxiomKind::ConceptSub: return "ConceptSub";
    case AxiomKind::RoleEquiv: return "RoleEquiv";
    case AxiomKind::RoleSub: return "RoleSub";
    case AxiomKind::ChainSub: return "ChainSub";
    case AxiomKind::ConceptAssert: return "ConceptAssert";
    case AxiomKind::NegConceptAssert: return "NegConceptAssert";
    case AxiomKind::RoleAssert: return "RoleAssert";
    case AxiomKind::NegRoleAssert: return "NegRoleAssert";
    case AxiomKind::SameIndividual: return "SameIndividual";
    case AxiomKind::DifferentIndividuals: return "DifferentIndividuals";
    case AxiomKind::RoleProperty: return "RoleProperty";
  }
  return "?";
}

std::string_view conceptKindName(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Atomic: return "Atomic";
    case ConceptKind::Top: return "Top";
    case ConceptKind::Bottom: return "Bottom";
    case ConceptKind::Not: return "Not";
    case ConceptKind::And: return "And";
    case ConceptKind::Or: return "Or";
    case ConceptKind::Nominal: return "Nominal";
    case ConceptKind::Exists: return "Exists";
    case ConceptKind::Forall: return "Forall";
    case ConceptKind::ExistsSelf: return "ExistsSelf";
    case ConceptKind::HasValue: return "HasValue";
    case ConceptKind::AtMost: return "AtMost";
    case ConceptKind::AtLeast: return "AtLeast";
  }
  return "?";
}

std::string_view characteristicName(RoleCharacteristic kind) {
  switch (kind) {
    case RoleCharacteristic::Refl: return "Refl";
    case RoleCharacteristic::Irrefl: return "Irrefl";
    case RoleCharacteristic::Sym: return "Sym";
    case RoleCharacteristic::Asym: return "Asym";
    case RoleCharacteristic::Trans: return "Trans";
    case RoleCharacteristic::Fn: return "Fn";
    case RoleCharacteristic::InvFn: return "InvFn";
    case RoleCharacteristic::Disj: return "Disj";
  }
  return "?";
}

}  // namespace opa::dl
