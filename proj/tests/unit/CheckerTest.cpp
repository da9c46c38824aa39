#include <gtest/gtest.h>

#include <algorithm>

#include "Fixtures.h"
#include "opa/corpus/Fetcher.h"
#include "opa/io/RdfIo.h"
#include "opa/profile/Checker.h"
#include "opa/profile/EmbeddedQuery.h"
#include "opa/profile/Report.h"
#include "opa/rdf/Vocabulary.h"

using namespace opa;
using namespace opa::profile;

namespace {

rdf::Graph ttl(const std::string& body) {
  io::ParseOptions o;
  o.blankScope = "d";
  return io::parseTurtle(
             "@prefix : <http://example.org/ex#> .\n"
             "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
             "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
             "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n" +
                 body,
             o)
      .graph;
}

rdf::Graph example(const std::string& name) { return test::loadFixture("examples/" + name).graph; }

std::vector<RuleId> rules(const Verdict& v) { return v.rulesFired(); }

TEST(EmbeddedQuery, Text) {
  std::string text = normalizeQueryText(embeddedQueryText());
  EXPECT_EQ(corpus::sha256Hex(text),
            "f266569666d8b1f9eaf5da0265f43994252c05417a6e6dd9c79a5202016010a0");
  EXPECT_NE(text.find("\n\t\t\t?left owl:someValuesFrom ?class .\n"), std::string::npos);
  EXPECT_TRUE(text.ends_with("} LIMIT 1"));
  std::size_t prefixes = 0;
  for (std::size_t at = 0; (at = text.find("PREFIX", at)) != std::string::npos; ++at) ++prefixes;
  EXPECT_EQ(prefixes, 3u);
}

TEST(EmbeddedQuery, UnionKeywordCount) {
  // Eight arms at the top level. The listing spells UNION more often than
  // that because the inner clauses are unions too.
  std::string text(embeddedQueryText());
  std::size_t unions = 0;
  for (std::size_t at = 0; (at = text.find("UNION", at)) != std::string::npos; ++at) ++unions;
  EXPECT_EQ(unions, 16u);
}

TEST(EmbeddedQuery, Normalization) {
  EXPECT_EQ(normalizeQueryText("a  \r\nb\t\r\n\r\n\n"), "a\nb");
  EXPECT_EQ(normalizeQueryText("x"), "x");
  EXPECT_EQ(normalizeQueryText(""), "");
}

TEST(RuleNames, RoundTrip) {
  for (auto r : kAllRules) {
    EXPECT_EQ(parseRuleName(ruleName(r)), r);
    EXPECT_EQ(parseRuleName(ruleName(r).substr(0, 2)), r);
  }
  EXPECT_EQ(parseRuleName("R8"), std::nullopt);
}

TEST(CheckQuery, EmptyGraphIsMember) {
  auto v = checkQuery(rdf::Graph());
  EXPECT_TRUE(v.member);
  EXPECT_TRUE(v.violations.empty());
  EXPECT_EQ(v.engine, Engine::Query);
}

TEST(CheckQuery, DatatypePropertyRejected) {
  auto v = checkQuery(example("datatype.ttl"));
  EXPECT_FALSE(v.member);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].rule, RuleId::R4_DATATYPE);
  ASSERT_EQ(v.violations[0].evidence.size(), 1u);
  EXPECT_EQ(v.violations[0].evidence[0].object, rdf::Term::iri(vocab::owl("DatatypeProperty")));
}

TEST(CheckQuery, MinCardinalityOnLeftRejectedUnderStrictSemantics) {
  auto v = checkQuery(example("mincard_left.ttl"));
  EXPECT_FALSE(v.member);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].rule, RuleId::R3_MINCARD);
}

TEST(CheckQuery, AtMostOneViolation) {
  auto g = ttl(":P a owl:DatatypeProperty . :Q a owl:DatatypeProperty . _:x owl:maxCardinality 2 .");
  auto v = checkQuery(g);
  EXPECT_EQ(v.violations.size(), 1u);
}

TEST(CheckDirect, Examples) {
  EXPECT_TRUE(checkDirect(example("existential_left.ttl")).member);

  auto right = checkDirect(example("existential_right.ttl"));
  EXPECT_FALSE(right.member);
  EXPECT_EQ(rules(right), std::vector<RuleId>{RuleId::R1_EXISTENTIAL_MISPLACED});

  EXPECT_TRUE(checkDirect(example("universal_right.ttl")).member);
  EXPECT_TRUE(checkDirect(example("universal_domain.ttl")).member);
  EXPECT_TRUE(checkDirect(example("mincard_left.ttl")).member);

  auto max = checkDirect(example("maxcard.ttl"));
  EXPECT_EQ(rules(max), std::vector<RuleId>{RuleId::R7_MAX_CARD});

  EXPECT_TRUE(checkDirect(rdf::Graph()).member);
}

TEST(CheckDirect, ExistentialWithoutSubsumption) {
  auto v = checkDirect(ttl("_:x owl:someValuesFrom :C ; owl:onProperty :R ."));
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_NE(v.violations[0].message.find("not the subclass"), std::string::npos);
}

TEST(CheckDirect, ExistentialInEquivalenceOrDisjointness) {
  for (const char* p : {"owl:equivalentClass", "owl:disjointWith", "owl:members", "owl:disjointUnionOf"}) {
    auto v = checkDirect(ttl("_:x owl:someValuesFrom :C ; owl:onProperty :R ; rdfs:subClassOf :D ; " +
                             std::string(p) + " :E ."));
    EXPECT_EQ(rules(v), std::vector<RuleId>{RuleId::R1_EXISTENTIAL_MISPLACED}) << p;
    EXPECT_NE(v.violations[0].message.find(std::string("subject of ") + p), std::string::npos) << p;
  }
}

TEST(CheckDirect, UniversalPlacement) {
  EXPECT_EQ(rules(checkDirect(ttl("_:x owl:allValuesFrom :C ; owl:onProperty :R ; rdfs:subClassOf :D ."))),
            std::vector<RuleId>{RuleId::R2_UNIVERSAL_MISPLACED});
  EXPECT_EQ(rules(checkDirect(ttl("_:x owl:allValuesFrom :C ; owl:onProperty :R . :D owl:equivalentClass _:x ."))),
            std::vector<RuleId>{RuleId::R2_UNIVERSAL_MISPLACED});
  EXPECT_TRUE(checkDirect(ttl("_:x a owl:Restriction ; owl:allValuesFrom :C ; owl:onProperty :R . :D rdfs:subClassOf _:x .")).member);
}

TEST(CheckDirect, MinCardinalityRules) {
  auto two = checkDirect(ttl("_:x owl:minCardinality 2 ; owl:onProperty :R ; rdfs:subClassOf :D ."));
  EXPECT_EQ(rules(two), std::vector<RuleId>{RuleId::R3_MINCARD});
  EXPECT_NE(two.violations[0].message.find("greater than 1"), std::string::npos);

  auto zero = checkDirect(ttl("_:x owl:minCardinality \"0\"^^xsd:nonNegativeInteger ; owl:onProperty :R ; rdfs:subClassOf :D ."));
  EXPECT_TRUE(zero.member);

  auto garbage = checkDirect(ttl("_:x owl:minCardinality \"one\" ; owl:onProperty :R ; rdfs:subClassOf :D ."));
  EXPECT_EQ(rules(garbage), std::vector<RuleId>{RuleId::R3_MINCARD});
  EXPECT_NE(garbage.violations[0].message.find("unreadable cardinality"), std::string::npos);

  auto right = checkDirect(ttl("_:x owl:minCardinality 1 ; owl:onProperty :R . :D rdfs:subClassOf _:x ."));
  EXPECT_EQ(rules(right), std::vector<RuleId>{RuleId::R3_MINCARD});
}

TEST(CheckDirect, SingleTripleRules) {
  auto v = checkDirect(ttl(
      ":P a owl:DatatypeProperty . :T a rdfs:Datatype .\n"
      "_:q owl:onClass :C ; owl:qualifiedCardinality 1 ; owl:minQualifiedCardinality 1 ; owl:maxQualifiedCardinality 1 .\n"
      "_:e owl:cardinality 1 . _:m owl:maxCardinality 1 ."));
  std::map<RuleId, int> counts;
  for (const auto& x : v.violations) ++counts[x.rule];
  EXPECT_EQ(counts[RuleId::R4_DATATYPE], 2);
  EXPECT_EQ(counts[RuleId::R5_QUALIFIED], 4);
  EXPECT_EQ(counts[RuleId::R6_EXACT_CARD], 1);
  EXPECT_EQ(counts[RuleId::R7_MAX_CARD], 1);
}

TEST(CheckDirect, ReportsEveryViolationSorted) {
  auto v = checkDirect(ttl(
      ":P a owl:DatatypeProperty .\n"
      ":D rdfs:subClassOf [ owl:someValuesFrom :C ; owl:onProperty :R ] .\n"
      ":E rdfs:subClassOf [ owl:someValuesFrom :C ; owl:onProperty :S ] ."));
  ASSERT_EQ(v.violations.size(), 3u);
  EXPECT_TRUE(std::is_sorted(v.violations.begin(), v.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.rule, a.focus) < std::tie(b.rule, b.focus);
  }));
}

TEST(CheckBoth, Examples) {
  auto empty = checkBoth(rdf::Graph());
  EXPECT_TRUE(empty.direct.member);
  EXPECT_TRUE(empty.query.member);
  EXPECT_FALSE(empty.divergence);

  auto strict = checkBoth(example("mincard_left.ttl"));
  EXPECT_TRUE(strict.direct.member);
  EXPECT_FALSE(strict.query.member);
  EXPECT_TRUE(strict.divergence);

  auto datatype = checkBoth(example("datatype.ttl"));
  EXPECT_FALSE(datatype.direct.member);
  EXPECT_FALSE(datatype.query.member);
  EXPECT_FALSE(datatype.divergence);
}

TEST(CheckBoth, RightSharingDivergence) {
  // equivalentClass with the same object as the subsumption: both reject.
  auto same = checkBoth(ttl("_:x owl:someValuesFrom :C ; owl:onProperty :R ; rdfs:subClassOf :D ; owl:equivalentClass :D ."));
  EXPECT_FALSE(same.direct.member);
  EXPECT_FALSE(same.query.member);
  // A different object escapes the query's MINUS.
  auto other = checkBoth(ttl("_:x owl:someValuesFrom :C ; owl:onProperty :R ; rdfs:subClassOf :D ; owl:equivalentClass :E ."));
  EXPECT_FALSE(other.direct.member);
  EXPECT_TRUE(other.query.member);
  EXPECT_TRUE(other.divergence);
}

TEST(Verdict, MemberIffNoViolations) {
  for (const auto& f : test::fixtureFiles("corpus")) {
    auto g = test::loadFixture(f.lexically_relative(test::fixtureDir())).graph;
    for (const auto& v : {checkDirect(g), checkQuery(g)}) {
      EXPECT_EQ(v.member, v.violations.empty()) << f;
      for (const auto& violation : v.violations) {
        EXPECT_FALSE(violation.evidence.empty());
        EXPECT_FALSE(violation.message.empty());
        for (const auto& t : violation.evidence) EXPECT_TRUE(g.contains(t)) << f << " " << t.toNTriples();
      }
    }
  }
}

TEST(Verdict, QueryMessageNamesClause) {
  auto v = checkQuery(example("maxcard.ttl"));
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].rule, RuleId::R7_MAX_CARD);
  EXPECT_NE(v.violations[0].message.find("query clause 8"), std::string::npos);
  EXPECT_EQ(ruleForQueryArm(0), RuleId::R1_EXISTENTIAL_MISPLACED);
  EXPECT_EQ(ruleForQueryArm(4), RuleId::R4_DATATYPE);
  EXPECT_THROW(ruleForQueryArm(8), std::out_of_range);
}

TEST(Report, Schema) {
  auto both = checkBoth(example("datatype.ttl"));
  auto j = verdictReport("datatype.ttl", &both.direct, &both.query, {"AL", "D"});
  EXPECT_EQ(j["source"], "datatype.ttl");
  EXPECT_EQ(j["member_direct"], false);
  EXPECT_EQ(j["member_query"], false);
  EXPECT_EQ(j["divergence"], false);
  ASSERT_EQ(j["violations"].size(), 2u);
  for (const auto& v : j["violations"]) {
    EXPECT_EQ(v["rule"], "R4_DATATYPE");
    EXPECT_TRUE(v["focus"].is_string());
    EXPECT_TRUE(v["evidence"].is_array());
    EXPECT_TRUE(v["message"].is_string());
  }
  EXPECT_EQ(j["letters"], nlohmann::json::array({"AL", "D"}));

  auto directOnly = verdictReport("x", &both.direct, nullptr, {});
  EXPECT_TRUE(directOnly["member_query"].is_null());
  EXPECT_TRUE(directOnly["divergence"].is_null());
}

TEST(Deadline, Expires) {
  util::Deadline expired(std::chrono::milliseconds(0));
  CheckOptions o;
  o.deadline = &expired;
  EXPECT_THROW(checkDirect(example("existential_right.ttl"), o), util::DeadlineExceeded);
}

}  // namespace
