#include <gtest/gtest.h>

#include <random>

#include "NaiveEval.h"
#include "RandomAlgebra.h"
#include "opa/profile/EmbeddedQuery.h"
#include "opa/rdf/Vocabulary.h"
#include "opa/sparql/Evaluator.h"

using namespace opa;
using namespace opa::sparql;
using rdf::Term;

namespace {

using namespace opa::test;

TEST(EvaluatorOracle, RandomTreesOnRandomGraphs) {
  std::mt19937 rng(kSeed);
  auto trees = randomTrees(rng);
  ASSERT_GE(trees.size(), 20u);
  std::size_t nonEmpty = 0;
  for (int gi = 0; gi < kGraphs; ++gi) {
    auto g = randomGraph(rng);
    for (std::size_t ti = 0; ti < trees.size(); ++ti) {
      const auto& tree = *trees[ti];
      auto got = evaluate(g, tree);
      auto want = test::naiveEval(g, tree);
      if (std::holds_alternative<Limit>(tree.node)) {
        // Which solutions survive a limit depends on production order; the
        // count and membership do not.
        ASSERT_EQ(got.size(), want.size()) << toSExpression(tree);
        auto all = test::sortedSolutions(test::naiveEval(g, *std::get<Limit>(tree.node).inner));
        for (const auto& s : got) {
          ASSERT_TRUE(std::binary_search(all.begin(), all.end(), s)) << toSExpression(tree);
        }
      } else {
        ASSERT_EQ(test::sortedSolutions(got), test::sortedSolutions(want))
            << "graph " << gi << " tree " << toSExpression(tree);
      }
      nonEmpty += !got.empty();
    }
  }
  // Guard against a generator that only ever produces empty results.
  EXPECT_GT(nonEmpty, static_cast<std::size_t>(kGraphs));
}

// The embedded query's own shapes, on graphs built from OWL vocabulary.
TEST(EvaluatorOracle, EmbeddedQueryArms) {
  std::mt19937 rng(kSeed + 1);
  std::vector<Term> nodes{Term::blank("d.x"), Term::blank("d.y"), Term::iri("http://v/C"),
                          Term::iri("http://v/R")};
  std::vector<Term> preds{Term::iri(vocab::owl("someValuesFrom")), Term::iri(vocab::owl("allValuesFrom")),
                          Term::iri(vocab::owl("minCardinality")), Term::iri(vocab::rdfs("subClassOf")),
                          Term::iri(vocab::owl("equivalentClass")), Term::iri(vocab::owl("onProperty")),
                          Term::iri(vocab::rdfs("domain")), Term::iri(vocab::kType)};
  std::vector<Term> objects = nodes;
  objects.push_back(Term::literal("1", vocab::xsd("nonNegativeInteger")));
  objects.push_back(Term::iri(vocab::owl("DatatypeProperty")));

  const auto& q = profile::embeddedQuery();
  auto body = std::get<Limit>(std::get<SelectAll>(q->node).inner->node).inner;
  auto arms = unionArms(body);
  for (int gi = 0; gi < 300; ++gi) {
    std::vector<rdf::Triple> ts;
    int n = static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) {
      ts.push_back({nodes[rng() % nodes.size()], preds[rng() % preds.size()], objects[rng() % objects.size()]});
    }
    rdf::Graph g(ts);
    for (const auto& arm : arms) {
      ASSERT_EQ(test::sortedSolutions(evaluate(g, *arm)),
                test::sortedSolutions(test::naiveEval(g, *arm)));
    }
    EXPECT_EQ(evaluate(g, *q).empty(), test::naiveEval(g, *body).empty());
  }
}

}  // namespace
