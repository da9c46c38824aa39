#include <gtest/gtest.h>

#include "NaiveEval.h"
#include "opa/io/RdfIo.h"
#include "opa/profile/EmbeddedQuery.h"
#include "opa/rdf/Vocabulary.h"
#include "opa/sparql/Evaluator.h"
#include "opa/sparql/QueryParser.h"

using namespace opa;
using namespace opa::sparql;
using rdf::Term;

namespace {

Term num(const std::string& v) { return Term::literal(v, vocab::kXsdInteger); }
Variable var(const std::string& n) { return {n}; }
Solution sol(std::initializer_list<std::pair<const char*, Term>> kv) {
  Solution s;
  for (const auto& [k, v] : kv) s.emplace(var(k), v);
  return s;
}

TEST(Compatible, Basics) {
  EXPECT_TRUE(compatible(sol({{"x", num("1")}}), sol({{"x", num("1")}, {"y", num("2")}})));
  EXPECT_FALSE(compatible(sol({{"x", num("1")}}), sol({{"x", num("2")}})));
  EXPECT_TRUE(compatible(Solution{}, sol({{"x", num("1")}})));
  EXPECT_TRUE(compatible(sol({{"x", num("1")}}), Solution{}));
}

TEST(NumericValue, Examples) {
  EXPECT_EQ(numericValue(Term::literal("1", vocab::xsd("nonNegativeInteger"))), 1.0);
  EXPECT_EQ(numericValue(Term::literal("2")), 2.0);
  EXPECT_EQ(numericValue(Term::literal("abc")), std::nullopt);
  EXPECT_EQ(numericValue(Term::literal("-3", vocab::xsd("int"))), -3.0);
  EXPECT_EQ(numericValue(Term::literal("2.5", vocab::kXsdDecimal)), 2.5);
  EXPECT_EQ(numericValue(Term::literal("1e2", vocab::kXsdDouble)), 100.0);
  EXPECT_EQ(numericValue(Term::literal("1.5", vocab::kXsdInteger)), std::nullopt);
  EXPECT_EQ(numericValue(Term::literal("1.5")), std::nullopt);
  EXPECT_EQ(numericValue(Term::langLiteral("1", "en")), std::nullopt);
  EXPECT_EQ(numericValue(Term::iri("http://x/1")), std::nullopt);
}

// Hand-built graphs so the Minus examples run through real patterns:
// ?x and ?y bind via (:a :p ?x), (:a :q ?y), (:a :r ?z).
rdf::Graph minusGraph() {
  return io::parseTurtle(
             "@prefix : <http://x/> .\n"
             ":a :p 1 ; :q 2 ; :r 3 .")
      .graph;
}

TEST(Evaluate, MinusRemovesCompatibleSharing) {
  auto q = parseQuery(
      "PREFIX : <http://x/> SELECT * { :a :p ?x . :a :q ?y . MINUS { :a :p ?x } }");
  EXPECT_TRUE(evaluate(minusGraph(), *q).empty());
}

TEST(Evaluate, MinusDisjointDomainsNeverRemove) {
  auto q = parseQuery("PREFIX : <http://x/> SELECT * { :a :p ?x . MINUS { :a :r ?z } }");
  auto r = evaluate(minusGraph(), *q);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], sol({{"x", num("1")}}));
}

TEST(Evaluate, MinusEmptyRight) {
  auto q = parseQuery("PREFIX : <http://x/> SELECT * { :a :p ?x . MINUS { :a :missing ?x } }");
  EXPECT_EQ(evaluate(minusGraph(), *q).size(), 1u);
}

TEST(Evaluate, FilterOnUnboundIsFalse) {
  auto q = parseQuery("PREFIX : <http://x/> SELECT * { :a :p ?x . FILTER (?num <= 1) }");
  EXPECT_TRUE(evaluate(minusGraph(), *q).empty());
  auto bound = parseQuery("PREFIX : <http://x/> SELECT * { :a :p ?num . FILTER (?num <= 1) }");
  EXPECT_EQ(evaluate(minusGraph(), *bound).size(), 1u);
}

TEST(Evaluate, FilterOnNonNumericIsFalse) {
  auto g = io::parseTurtle("@prefix : <http://x/> . :a :p \"abc\" , :b .").graph;
  auto q = parseQuery("PREFIX : <http://x/> SELECT * { :a :p ?n . FILTER (?n != 0) }");
  EXPECT_TRUE(evaluate(g, *q).empty());
}

TEST(Evaluate, SingleBgp) {
  auto g = io::parseTurtle(
               "@prefix : <http://x/> . @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
               ":A rdfs:subClassOf :B .")
               .graph;
  auto q = parseQuery("PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#> SELECT * { ?s rdfs:subClassOf ?o }");
  auto r = evaluate(g, *q);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], sol({{"s", Term::iri("http://x/A")}, {"o", Term::iri("http://x/B")}}));
}

TEST(Evaluate, RepeatedVariableInPattern) {
  auto g = io::parseTurtle("@prefix : <http://x/> . :a :p :a . :a :p :b .").graph;
  auto r = evaluate(g, *parseQuery("SELECT * { ?x <http://x/p> ?x }"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].at(var("x")), Term::iri("http://x/a"));
}

TEST(Evaluate, MissingConstantMatchesNothing) {
  auto r = evaluate(minusGraph(), *parseQuery("SELECT * { ?s <http://x/nope> ?o }"));
  EXPECT_TRUE(r.empty());
}

TEST(Evaluate, UnionIsConcatenationAndJoinCommutes) {
  auto g = io::parseTurtle("@prefix : <http://x/> . :a :p :b , :c . :b :q :d . :c :q :d , :e .").graph;
  auto u = evaluate(g, *parseQuery("SELECT * { { ?s <http://x/p> ?o } UNION { ?s <http://x/q> ?o } }"));
  EXPECT_EQ(u.size(), 5u);
  auto j1 = evaluate(g, *parseQuery("SELECT * { { ?a <http://x/p> ?b } { ?b <http://x/q> ?c } }"));
  auto j2 = evaluate(g, *parseQuery("SELECT * { { ?b <http://x/q> ?c } { ?a <http://x/p> ?b } }"));
  EXPECT_EQ(test::sortedSolutions(j1), test::sortedSolutions(j2));
  EXPECT_EQ(j1.size(), 3u);
}

TEST(Evaluate, DuplicatesArePreserved) {
  auto g = io::parseTurtle("@prefix : <http://x/> . :a :p :b , :c .").graph;
  auto r = evaluate(g, *parseQuery("SELECT * { ?s <http://x/p> ?o1 . ?s <http://x/p> ?o2 . }"));
  EXPECT_EQ(r.size(), 4u);
  auto u = evaluate(g, *parseQuery("SELECT * { { ?s <http://x/p> <http://x/b> } UNION { ?s <http://x/p> <http://x/c> } }"));
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0], u[1]);
}

TEST(Evaluate, LimitZeroAndLimitN) {
  auto g = io::parseTurtle("@prefix : <http://x/> . :a :p :b , :c , :d .").graph;
  EXPECT_TRUE(evaluate(g, *parseQuery("SELECT * { ?s ?p ?o } LIMIT 0")).empty());
  EXPECT_EQ(evaluate(g, *parseQuery("SELECT * { ?s ?p ?o } LIMIT 2")).size(), 2u);
  EXPECT_EQ(evaluate(g, *parseQuery("SELECT * { ?s ?p ?o } LIMIT 10")).size(), 3u);
}

TEST(Evaluate, DeadlineIsHonoured) {
  std::vector<rdf::Triple> triples;
  for (int i = 0; i < 200; ++i) {
    triples.push_back({Term::iri("http://x/s" + std::to_string(i)), Term::iri("http://x/p"),
                       Term::iri("http://x/o" + std::to_string(i % 7))});
  }
  rdf::Graph g(triples);
  util::Deadline expired(std::chrono::milliseconds(0));
  EvalOptions o;
  o.deadline = &expired;
  auto q = parseQuery("SELECT * { ?a ?p ?b . ?c ?p ?d . ?e ?p ?f }");
  EXPECT_THROW(evaluate(g, *q, o), util::DeadlineExceeded);
}

TEST(Evaluate, TooManyVariables) {
  std::string q = "SELECT * {";
  for (int i = 0; i < 22; ++i) q += " ?a" + std::to_string(i) + " ?b" + std::to_string(i) + " ?c" + std::to_string(i) + " .";
  q += " }";
  EXPECT_THROW(evaluate(rdf::Graph(), *parseQuery(q)), std::invalid_argument);
}

TEST(Evaluate, BgpMonotoneUnderInsertion) {
  auto g = io::parseTurtle("@prefix : <http://x/> . :a :p :b . :b :p :c .").graph;
  auto q = parseQuery("SELECT * { ?x <http://x/p> ?y . ?y <http://x/p> ?z }");
  auto before = evaluate(g, *q).size();
  auto bigger = g.withTriple({Term::iri("http://x/c"), Term::iri("http://x/p"), Term::iri("http://x/d")});
  EXPECT_GE(evaluate(bigger, *q).size(), before);
  EXPECT_EQ(evaluate(bigger, *q).size(), 2u);
}

// Limit(1) over the embedded union must not touch arms after the first
// one that produces a solution.
TEST(Evaluate, LimitShortCircuitsLaterArms) {
  auto g = io::parseTurtle(
               "@prefix : <http://x/> . @prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
               "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
               "_:r owl:someValuesFrom :C ; owl:onProperty :R .\n"
               ":D rdfs:subClassOf _:r .\n"
               ":P a owl:DatatypeProperty .\n"
               "_:u owl:allValuesFrom :C ; owl:onProperty :R . :E rdfs:subClassOf _:u .\n"
               "_:q owl:onClass :C ; owl:maxCardinality 2 .")
               .graph;
  const auto& full = profile::embeddedQuery();
  auto arms = unionArms(std::get<Limit>(std::get<SelectAll>(full->node).inner->node).inner);

  EvalStats fullStats, firstStats, secondStats;
  EvalOptions o;
  o.stats = &fullStats;
  auto r = evaluate(g, *full, o);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].count(var("left")));

  o.stats = &firstStats;
  evaluate(g, *makeSelectAll(makeLimit(1, arms[0])), o);
  EXPECT_EQ(fullStats.probes, firstStats.probes);

  // Evaluating the second arm as well costs probes, so the equality above is
  // not vacuous.
  o.stats = &secondStats;
  evaluate(g, *makeSelectAll(makeLimit(1, arms[1])), o);
  EXPECT_GT(secondStats.probes, 0u);
}

}  // namespace
