#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "opa/rdf/Term.h"

namespace opa::sparql {

/// A query variable; `name` excludes the leading '?'.
struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

using PatternSlot = std::variant<Variable, rdf::Term>;

struct QueryPattern {
  PatternSlot subject;
  PatternSlot predicate;
  PatternSlot object;
  bool operator==(const QueryPattern&) const = default;
};

enum class CompareOp { Less, LessEq, Greater, GreaterEq, Equal, NotEqual };

/// A variable or a numeric constant inside a FILTER comparison.
using FilterOperand = std::variant<Variable, double>;

struct FilterExpr {
  CompareOp op = CompareOp::Equal;
  FilterOperand lhs;
  FilterOperand rhs;
  bool operator==(const FilterExpr&) const = default;
};

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Bgp {
  std::vector<QueryPattern> patterns;
};
struct Join {
  AlgebraPtr left, right;
};
struct Union {
  AlgebraPtr left, right;
};
struct Minus {
  AlgebraPtr left, right;
};
struct Filter {
  FilterExpr expr;
  AlgebraPtr inner;
};
struct Limit {
  std::size_t count = 0;
  AlgebraPtr inner;
};
struct SelectAll {
  AlgebraPtr inner;
};

/// Immutable query algebra tree. Subtrees are shared, never mutated.
struct Algebra {
  std::variant<Bgp, Join, Union, Minus, Filter, Limit, SelectAll> node;
};

AlgebraPtr makeBgp(std::vector<QueryPattern> patterns);
AlgebraPtr makeJoin(AlgebraPtr left, AlgebraPtr right);
AlgebraPtr makeUnion(AlgebraPtr left, AlgebraPtr right);
AlgebraPtr makeMinus(AlgebraPtr left, AlgebraPtr right);
AlgebraPtr makeFilter(FilterExpr expr, AlgebraPtr inner);
AlgebraPtr makeLimit(std::size_t count, AlgebraPtr inner);
AlgebraPtr makeSelectAll(AlgebraPtr inner);

/// Flattens a (left-nested) chain of Union nodes into its arms, left to
/// right. A non-Union node is its own single arm.
std::vector<AlgebraPtr> unionArms(const AlgebraPtr& node);

/// Variables in order of first appearance (patterns, then filters).
std::vector<Variable> variablesOf(const Algebra& node);

/// Compact S-expression, e.g. `(minus (bgp ?s <p> ?o) (bgp))`. Used by
/// tests and the `query --explain` CLI flag.
std::string toSExpression(const Algebra& node);

using Solution = std::map<Variable, rdf::Term>;
using SolutionSequence = std::vector<Solution>;

}  // namespace opa::sparql
