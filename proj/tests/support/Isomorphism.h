#pragma once

// Graph isomorphism by exhaustive search over blank node bijections.
// Intended for small graphs only.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "opa/rdf/Graph.h"

namespace opa::test {

inline std::vector<rdf::Term> blankNodes(const rdf::Graph& g) {
  std::set<rdf::Term> out;
  for (const auto& t : g.triples()) {
    if (t.subject.isBlank()) out.insert(t.subject);
    if (t.object.isBlank()) out.insert(t.object);
  }
  return {out.begin(), out.end()};
}

inline bool isomorphic(const rdf::Graph& a, const rdf::Graph& b, std::size_t maxBlanks = 8) {
  if (a.size() != b.size()) return false;
  auto ba = blankNodes(a), bb = blankNodes(b);
  if (ba.size() != bb.size()) return false;
  if (ba.size() > maxBlanks) throw std::invalid_argument("too many blank nodes for exhaustive search");

  std::set<rdf::Triple> target;
  for (const auto& t : b.triples()) target.insert(t);
  auto source = a.triples();

  std::vector<std::size_t> perm(bb.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::map<rdf::Term, rdf::Term> map;
    for (std::size_t i = 0; i < ba.size(); ++i) map.emplace(ba[i], bb[perm[i]]);
    auto rename = [&](const rdf::Term& t) { return t.isBlank() ? map.at(t) : t; };
    bool ok = true;
    for (const auto& t : source) {
      if (!target.count({rename(t.subject), t.predicate, rename(t.object)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace opa::test
