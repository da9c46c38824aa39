#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "opa/rdf/Graph.h"
#include "opa/rdf/Vocabulary.h"

using namespace opa;
using rdf::Term;
using rdf::Triple;

namespace {

Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }
Term subClassOf() { return Term::iri(vocab::rdfs("subClassOf")); }
Term type() { return Term::iri(vocab::kType); }

TEST(Term, LiteralDatatypeDefaults) {
  auto plain = Term::literal("x");
  EXPECT_EQ(plain.datatype(), vocab::kXsdString);
  auto tagged = Term::langLiteral("chat", "fr");
  EXPECT_EQ(tagged.datatype(), vocab::kLangString);
  EXPECT_EQ(tagged.language(), "fr");
}

TEST(Term, IriInvariants) {
  EXPECT_THROW(Term::iri(""), rdf::InvalidTerm);
  EXPECT_THROW(Term::iri("http://a b"), rdf::InvalidTerm);
}

TEST(Term, EqualityIsLexical) {
  auto one = Term::literal("1", vocab::xsd("int"));
  auto padded = Term::literal("01", vocab::xsd("int"));
  EXPECT_NE(one, padded);
  EXPECT_EQ(one, Term::literal("1", vocab::xsd("int")));
  EXPECT_NE(Term::iri("http://x"), Term::blank("http://x"));
}

TEST(Triple, SlotInvariants) {
  EXPECT_THROW(Triple::make(Term::literal("s"), ex("p"), ex("o")), rdf::InvalidTerm);
  EXPECT_THROW(Triple::make(ex("A"), Term::literal("p"), ex("B")), rdf::InvalidTerm);
  EXPECT_THROW(Triple::make(ex("A"), Term::blank("p"), ex("B")), rdf::InvalidTerm);
  EXPECT_NO_THROW(Triple::make(Term::blank("x"), ex("p"), Term::literal("o")));
}

TEST(Graph, InsertSingleton) {
  rdf::Graph g;
  g = g.withTriple({ex("A"), subClassOf(), ex("B")});
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, InsertIsIdempotent) {
  Triple t{ex("A"), subClassOf(), ex("B")};
  auto g = rdf::Graph().withTriple(t).withTriple(t);
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, InsertRejectsLiteralPredicate) {
  EXPECT_THROW(rdf::Graph().withTriple({ex("A"), Term::literal("p"), ex("B")}), rdf::InvalidTerm);
  rdf::GraphBuilder b;
  EXPECT_THROW(b.insert({ex("A"), Term::literal("p"), ex("B")}), rdf::InvalidTerm);
}

TEST(Graph, MatchByPredicate) {
  rdf::Graph g({{ex("A"), subClassOf(), ex("B")}, {ex("A"), type(), ex("C")}});
  auto m = g.match({std::nullopt, subClassOf(), std::nullopt});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], (Triple{ex("A"), subClassOf(), ex("B")}));
  EXPECT_EQ(g.match({}).size(), 2u);
}

TEST(Graph, MatchRestrictionDefinition) {
  Term x = Term::blank("x");
  Term svf = Term::iri(vocab::owl("someValuesFrom"));
  rdf::Graph g({{x, svf, ex("C")},
                {x, Term::iri(vocab::owl("onProperty")), ex("R")},
                {x, subClassOf(), ex("D")}});
  auto m = g.match({x, svf, std::nullopt});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].object, ex("C"));
}

TEST(Graph, ContainsSizeIterate) {
  EXPECT_FALSE(rdf::Graph().contains({ex("A"), subClassOf(), ex("B")}));
  rdf::Graph g({{ex("A"), subClassOf(), ex("B")},
                {ex("B"), subClassOf(), ex("C")},
                {ex("C"), subClassOf(), ex("D")}});
  EXPECT_EQ(g.size(), 3u);
  auto all = g.triples();
  std::set<Triple> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Graph, WithoutRemovesOnlyListed) {
  Triple a{ex("A"), subClassOf(), ex("B")}, b{ex("B"), subClassOf(), ex("C")};
  rdf::Graph g({a, b});
  std::vector<Triple> gone{a, {ex("Z"), subClassOf(), ex("Z")}};
  auto h = g.without(gone);
  EXPECT_EQ(h.size(), 1u);
  EXPECT_TRUE(h.contains(b));
}

// Random graphs over a small vocabulary, checked against a linear scan.
class GraphProperty : public ::testing::TestWithParam<int> {};

std::vector<Triple> randomTriples(std::mt19937& rng, int n) {
  std::vector<Term> nodes{ex("a"), ex("b"), ex("c"), Term::blank("x"), Term::blank("y")};
  std::vector<Term> preds{ex("p"), ex("q"), subClassOf()};
  std::vector<Term> objs = nodes;
  objs.push_back(Term::literal("1"));
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({nodes[rng() % nodes.size()], preds[rng() % preds.size()], objs[rng() % objs.size()]});
  }
  return out;
}

TEST_P(GraphProperty, MatchAgreesWithScan) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()));
  auto triples = randomTriples(rng, 1 + static_cast<int>(rng() % 60));
  rdf::Graph g(triples);
  std::set<Triple> base(triples.begin(), triples.end());
  ASSERT_EQ(g.size(), base.size());

  std::vector<std::optional<Term>> slots{std::nullopt, ex("a"), Term::blank("x"), ex("p"),
                                         subClassOf(), Term::literal("1")};
  for (const auto& s : slots) {
    for (const auto& p : slots) {
      for (const auto& o : slots) {
        rdf::TriplePattern pat{s, p, o};
        auto got = g.match(pat);
        std::set<Triple> gotSet(got.begin(), got.end());
        EXPECT_EQ(gotSet.size(), got.size());
        std::set<Triple> want;
        for (const auto& t : base) {
          if (pat.matches(t)) want.insert(t);
        }
        EXPECT_EQ(gotSet, want);
      }
    }
  }
  for (const auto& t : base) {
    EXPECT_TRUE(g.contains(t));
    for (auto pat : {rdf::TriplePattern{t.subject, {}, {}}, rdf::TriplePattern{{}, t.predicate, {}},
                     rdf::TriplePattern{{}, {}, t.object}}) {
      auto m = g.match(pat);
      EXPECT_NE(std::find(m.begin(), m.end(), t), m.end());
    }
  }
}

TEST_P(GraphProperty, BuildOrderIsIrrelevant) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()) + 1000);
  auto triples = randomTriples(rng, 30);
  auto shuffled = triples;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_EQ(rdf::Graph(triples), rdf::Graph(shuffled));
  EXPECT_EQ(rdf::Graph(triples).triples(), rdf::Graph(shuffled).triples());
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperty, ::testing::Range(0, 40));

}  // namespace
