#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "opa/rdf/Term.h"

// Abstract syntax for description logic concepts, roles and axioms. Nodes
// are plain values; factory functions enforce the arity invariants and
// throw std::invalid_argument when they are violated.
namespace opa::dl {

struct Concept;

enum class RoleKind {
  Atomic,
  Universal,
  Empty,
  Inverse,
  Not,
  And,
  Or,
  Chain,
  TransClosure,
  ReflTransClosure,
  Restrict,
  Id,
  Sym,
};

struct Role {
  RoleKind kind = RoleKind::Universal;
  std::vector<rdf::Term> names;   // Atomic: the property
  std::vector<Role> operands;     // Inverse/Not/closures/Sym/Restrict: 1, And/Or: 2, Chain: >= 2
  std::vector<Concept> left;      // Restrict: optional domain side
  std::vector<Concept> right;     // Restrict: optional range side; Id: the concept

  static Role atomic(rdf::Term name);
  static Role universal();
  static Role empty();
  static Role inverse(Role r);
  static Role negation(Role r);
  static Role conjunction(Role r, Role s);
  static Role disjunction(Role r, Role s);
  static Role chain(std::vector<Role> roles);
  static Role transClosure(Role r);
  static Role reflTransClosure(Role r);
  static Role restrict(Role r, std::optional<Concept> left, std::optional<Concept> right);
  static Role identity(Concept c);
  static Role symmetric(Role r);

  bool operator==(const Role&) const;
};

enum class ConceptKind {
  Atomic,
  Top,
  Bottom,
  Not,
  And,
  Or,
  Nominal,
  Exists,
  Forall,
  ExistsSelf,
  HasValue,
  AtMost,
  AtLeast,
};

struct Concept {
  ConceptKind kind = ConceptKind::Top;
  std::vector<rdf::Term> names;   // Atomic: the class; Nominal: individuals; HasValue: 1
  std::vector<Concept> operands;  // Not: 1; And/Or: >= 2; Exists/Forall: filler; AtMost/AtLeast: 0 or 1
  std::vector<Role> roles;        // every restriction: exactly 1
  std::uint64_t count = 0;        // AtMost/AtLeast

  static Concept atomic(rdf::Term name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept c);
  static Concept conjunction(std::vector<Concept> cs);
  static Concept disjunction(std::vector<Concept> cs);
  static Concept nominal(std::vector<rdf::Term> individuals);
  static Concept exists(Role r, Concept c);
  static Concept forall(Role r, Concept c);
  static Concept existsSelf(Role r);
  static Concept hasValue(Role r, rdf::Term individual);
  static Concept atMost(std::uint64_t n, Role r, std::optional<Concept> c = std::nullopt);
  static Concept atLeast(std::uint64_t n, Role r, std::optional<Concept> c = std::nullopt);

  bool operator==(const Concept&) const;
};

enum class AxiomKind {
  ConceptEquiv,
  ConceptSub,
  RoleEquiv,
  RoleSub,
  ChainSub,
  ConceptAssert,
  NegConceptAssert,
  RoleAssert,
  NegRoleAssert,
  SameIndividual,
  DifferentIndividuals,
  RoleProperty,
};

enum class RoleCharacteristic { Refl, Irrefl, Sym, Asym, Trans, Fn, InvFn, Disj };

struct Axiom {
  AxiomKind kind = AxiomKind::ConceptSub;
  std::vector<Concept> concepts;      // ConceptEquiv/Sub: 2; (Neg)ConceptAssert: 1
  std::vector<Role> roles;            // RoleEquiv/Sub: 2; ChainSub: {chain, super}; (Neg)RoleAssert: 1; RoleProperty: 1 or 2
  std::vector<rdf::Term> individuals; // assertions: 1 or 2
  RoleCharacteristic characteristic = RoleCharacteristic::Refl;

  static Axiom conceptEquiv(Concept c, Concept d);
  static Axiom conceptSub(Concept c, Concept d);
  static Axiom roleEquiv(Role r, Role s);
  static Axiom roleSub(Role r, Role s);
  static Axiom chainSub(std::vector<Role> chain, Role super);
  static Axiom conceptAssert(Concept c, rdf::Term a);
  static Axiom negConceptAssert(Concept c, rdf::Term a);
  static Axiom roleAssert(Role r, rdf::Term a, rdf::Term b);
  static Axiom negRoleAssert(Role r, rdf::Term a, rdf::Term b);
  static Axiom sameIndividual(rdf::Term a, rdf::Term b);
  static Axiom differentIndividuals(rdf::Term a, rdf::Term b);
  /// Disj takes exactly two roles, every other characteristic one.
  static Axiom roleProperty(RoleCharacteristic kind, std::vector<Role> roles);

  bool operator==(const Axiom&) const = default;
};

std::string_view axiomKindName(AxiomKind kind);
std::string_view conceptKindName(ConceptKind kind);
std::string_view characteristicName(RoleCharacteristic kind);

}  // namespace opa::dl
