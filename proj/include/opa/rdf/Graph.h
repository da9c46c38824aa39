#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "opa/rdf/Term.h"

namespace opa::rdf {

/// One RDF statement. Subjects are IRIs or blank nodes, predicates are IRIs.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// Builds a triple, throwing InvalidTerm when the slot kinds are illegal.
  static Triple make(Term subject, Term predicate, Term object);
  void validate() const;

  /// N-Triples line without the trailing newline: `<s> <p> <o> .`
  std::string toNTriples() const;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

/// A triple with optional slots; an absent slot matches anything.
struct TriplePattern {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;

  bool matches(const Triple& t) const;
};

using TermId = std::uint32_t;

struct IdTriple {
  TermId s;
  TermId p;
  TermId o;
  auto operator<=>(const IdTriple&) const = default;
};

/// Dictionary-encoded pattern used by the query evaluator.
struct IdPattern {
  std::optional<TermId> s;
  std::optional<TermId> p;
  std::optional<TermId> o;
};

/// Immutable, set-semantics triple store with SPO, POS and OSP permutation
/// indexes built eagerly at construction.
///
/// Term ids are assigned in lexicographic Term order, so two graphs holding
/// the same set of triples have identical internal layouts and iterate in
/// the same order regardless of how they were built.
class Graph {
 public:
  Graph() = default;
  /// Validates every triple and drops duplicates.
  explicit Graph(std::vector<Triple> triples);

  /// Returns a copy of this graph that also contains `t`.
  Graph withTriple(const Triple& t) const;
  /// Returns a copy of this graph without any of `removed`.
  Graph without(std::span<const Triple> removed) const;

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }
  bool contains(const Triple& t) const;

  /// Every triple agreeing with the pattern's concrete slots.
  std::vector<Triple> match(const TriplePattern& pattern) const;
  /// All triples in canonical (lexicographic) order.
  std::vector<Triple> triples() const;

  // Dictionary level access.
  std::optional<TermId> lookup(const Term& term) const;
  const Term& term(TermId id) const { return terms_[id]; }
  std::size_t termCount() const { return terms_.size(); }
  Triple decode(const IdTriple& t) const { return {terms_[t.s], terms_[t.p], terms_[t.o]}; }

  /// Contiguous run of triples matching `pattern`. All returned triples
  /// match; the run comes from whichever permutation makes the bound slots
  /// a key prefix.
  std::span<const IdTriple> scan(const IdPattern& pattern) const;

  bool operator==(const Graph& other) const {
    return terms_ == other.terms_ && spo_ == other.spo_;
  }

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::vector<IdTriple> spo_;
  std::vector<IdTriple> pos_;
  std::vector<IdTriple> osp_;
};

/// Accumulates triples for a Graph. Parsers use this; the resulting Graph is
/// immutable.
class GraphBuilder {
 public:
  void insert(Triple t) {
    t.validate();
    triples_.push_back(std::move(t));
  }
  std::size_t pending() const { return triples_.size(); }
  Graph build() && { return Graph(std::move(triples_)); }

 private:
  std::vector<Triple> triples_;
};

}  // namespace opa::rdf
