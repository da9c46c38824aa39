#include "opa/rdf/Graph.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace opa::rdf {

void Triple::validate() const {
  if (subject.isLiteral()) throw InvalidTerm("triple subject must not be a literal");
  if (!predicate.isIri()) throw InvalidTerm("triple predicate must be an IRI");
}

Triple Triple::make(Term subject, Term predicate, Term object) {
  Triple t{std::move(subject), std::move(predicate), std::move(object)};
  t.validate();
  return t;
}

std::string Triple::toNTriples() const {
  return subject.toNTriples() + " " + predicate.toNTriples() + " " + object.toNTriples() + " .";
}

bool TriplePattern::matches(const Triple& t) const {
  return (!subject || *subject == t.subject) && (!predicate || *predicate == t.predicate) &&
         (!object || *object == t.object);
}

namespace {

// Key orders for the three permutations.
bool lessPos(const IdTriple& a, const IdTriple& b) {
  return std::tie(a.p, a.o, a.s) < std::tie(b.p, b.o, b.s);
}
bool lessOsp(const IdTriple& a, const IdTriple& b) {
  return std::tie(a.o, a.s, a.p) < std::tie(b.o, b.s, b.p);
}

}  // namespace

Graph::Graph(std::vector<Triple> triples) {
  std::vector<Term> terms;
  terms.reserve(triples.size() * 3);
  for (const auto& t : triples) {
    t.validate();
    terms.push_back(t.subject);
    terms.push_back(t.predicate);
    terms.push_back(t.object);
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  terms_ = std::move(terms);
  ids_.reserve(terms_.size());
  for (TermId i = 0; i < terms_.size(); ++i) ids_.emplace(terms_[i], i);

  spo_.reserve(triples.size());
  for (const auto& t : triples) {
    spo_.push_back({ids_.at(t.subject), ids_.at(t.predicate), ids_.at(t.object)});
  }
  std::sort(spo_.begin(), spo_.end());
  spo_.erase(std::unique(spo_.begin(), spo_.end()), spo_.end());
  pos_ = spo_;
  std::sort(pos_.begin(), pos_.end(), lessPos);
  osp_ = spo_;
  std::sort(osp_.begin(), osp_.end(), lessOsp);
}

Graph Graph::withTriple(const Triple& t) const {
  auto all = triples();
  all.push_back(t);
  return Graph(std::move(all));
}

Graph Graph::without(std::span<const Triple> removed) const {
  std::set<Triple> drop(removed.begin(), removed.end());
  std::vector<Triple> kept;
  for (auto& t : triples()) {
    if (!drop.count(t)) kept.push_back(std::move(t));
  }
  return Graph(std::move(kept));
}

std::optional<TermId> Graph::lookup(const Term& term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool Graph::contains(const Triple& t) const {
  auto s = lookup(t.subject);
  auto p = lookup(t.predicate);
  auto o = lookup(t.object);
  if (!s || !p || !o) return false;
  return std::binary_search(spo_.begin(), spo_.end(), IdTriple{*s, *p, *o});
}

std::span<const IdTriple> Graph::scan(const IdPattern& pat) const {
  // Pick the permutation in which the bound slots form a key prefix.
  auto run = [](const std::vector<IdTriple>& v, auto key, auto project) {
    auto lo = std::partition_point(v.begin(), v.end(),
                                   [&](const IdTriple& t) { return project(t) < key; });
    auto hi = std::partition_point(lo, v.end(),
                                   [&](const IdTriple& t) { return !(key < project(t)); });
    return std::span<const IdTriple>(lo, hi);
  };
  if (pat.s && pat.p && pat.o) {
    return run(spo_, IdTriple{*pat.s, *pat.p, *pat.o}, [](const IdTriple& t) { return t; });
  }
  if (pat.s && pat.p) {
    return run(spo_, std::pair(*pat.s, *pat.p), [](const IdTriple& t) { return std::pair(t.s, t.p); });
  }
  if (pat.s && pat.o) {
    return run(osp_, std::pair(*pat.o, *pat.s), [](const IdTriple& t) { return std::pair(t.o, t.s); });
  }
  if (pat.s) return run(spo_, *pat.s, [](const IdTriple& t) { return t.s; });
  if (pat.p && pat.o) {
    return run(pos_, std::pair(*pat.p, *pat.o), [](const IdTriple& t) { return std::pair(t.p, t.o); });
  }
  if (pat.p) return run(pos_, *pat.p, [](const IdTriple& t) { return t.p; });
  if (pat.o) return run(osp_, *pat.o, [](const IdTriple& t) { return t.o; });
  return spo_;
}

std::vector<Triple> Graph::match(const TriplePattern& pattern) const {
  IdPattern ids;
  auto bind = [this](const std::optional<Term>& slot, std::optional<TermId>& out) {
    if (!slot) return true;
    out = lookup(*slot);
    return out.has_value();
  };
  std::vector<Triple> result;
  if (!bind(pattern.subject, ids.s) || !bind(pattern.predicate, ids.p) ||
      !bind(pattern.object, ids.o)) {
    return result;
  }
  for (const auto& t : scan(ids)) result.push_back(decode(t));
  return result;
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const auto& t : spo_) out.push_back(decode(t));
  return out;
}

}  // namespace opa::rdf
