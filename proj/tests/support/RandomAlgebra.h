#pragma once

// Random graphs over four symbols and random algebra trees over
// BGP/Join/Union/Minus/Filter, shared by the oracle test and the acceptance
// runner.

#include <random>
#include <vector>

#include "opa/rdf/Graph.h"
#include "opa/rdf/Vocabulary.h"
#include "opa/sparql/Algebra.h"

namespace opa::test {

using rdf::Term;
using namespace opa::sparql;

inline constexpr unsigned kSeed = 20240611;
inline constexpr int kGraphs = 500;
inline constexpr int kTrees = 40;

// Four symbols. The numeric literal may only appear as an object.
inline const std::vector<Term>& symbols() {
  static const std::vector<Term> s{Term::iri("http://v/a"), Term::iri("http://v/b"),
                                   Term::iri("http://v/c"), Term::literal("1", vocab::kXsdInteger)};
  return s;
}

inline rdf::Graph randomGraph(std::mt19937& rng) {
  std::vector<rdf::Triple> out;
  int n = static_cast<int>(rng() % 9);
  for (int i = 0; i < n; ++i) {
    out.push_back({symbols()[rng() % 3], symbols()[rng() % 3], symbols()[rng() % 4]});
  }
  return rdf::Graph(out);
}

inline PatternSlot randomSlot(std::mt19937& rng, bool objectPosition) {
  static const char* vars[] = {"x", "y", "z", "w"};
  if (rng() % 2) return Variable{vars[rng() % 4]};
  return symbols()[rng() % (objectPosition ? 4 : 3)];
}

inline AlgebraPtr randomBgp(std::mt19937& rng) {
  std::vector<QueryPattern> patterns;
  int n = static_cast<int>(rng() % 3);  // 0..2 patterns; the empty BGP is the unit
  for (int i = 0; i < n; ++i) {
    patterns.push_back({randomSlot(rng, false), randomSlot(rng, false), randomSlot(rng, true)});
  }
  return makeBgp(std::move(patterns));
}

inline AlgebraPtr randomTree(std::mt19937& rng, int depth) {
  if (depth == 0) return randomBgp(rng);
  switch (rng() % 5) {
    case 0: return randomBgp(rng);
    case 1: return makeJoin(randomTree(rng, depth - 1), randomTree(rng, depth - 1));
    case 2: return makeUnion(randomTree(rng, depth - 1), randomTree(rng, depth - 1));
    case 3: return makeMinus(randomTree(rng, depth - 1), randomTree(rng, depth - 1));
    default: {
      static const char* vars[] = {"x", "y", "z", "w"};
      FilterExpr e;
      e.op = static_cast<CompareOp>(rng() % 6);
      e.lhs = Variable{vars[rng() % 4]};
      e.rhs = static_cast<double>(rng() % 3);
      if (rng() % 4 == 0) std::swap(e.lhs, e.rhs);
      return makeFilter(e, randomTree(rng, depth - 1));
    }
  }
}

// Trees are guaranteed to include every operator at least once across the set.
inline std::vector<AlgebraPtr> randomTrees(std::mt19937& rng) {
  std::vector<AlgebraPtr> out;
  for (int i = 0; i < kTrees; ++i) out.push_back(randomTree(rng, 1 + i % 4));
  out.push_back(makeMinus(randomBgp(rng), randomBgp(rng)));
  out.push_back(makeFilter({CompareOp::LessEq, Variable{"x"}, 1.0}, randomBgp(rng)));
  out.push_back(makeLimit(1, makeUnion(randomTree(rng, 2), randomTree(rng, 2))));
  return out;
}

}  // namespace opa::test
