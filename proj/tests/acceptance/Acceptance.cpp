// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "Fixtures.h"
#include "Isomorphism.h"
#include "NaiveEval.h"
#include "RandomAlgebra.h"
#include "MappingCases.h"
#include "opa/corpus/Fetcher.h"
#include "opa/corpus/Harness.h"
#include "opa/corpus/Report.h"
#include "opa/dl/Extractor.h"
#include "opa/dl/Renderer.h"
#include "opa/io/RdfIo.h"
#include "opa/profile/Checker.h"
#include "opa/profile/EmbeddedQuery.h"
#include "opa/sparql/Evaluator.h"
#include "opa/sparql/QueryParser.h"

using namespace opa;
namespace fs = std::filesystem;

namespace {

constexpr const char* kQueryDigest = "f266569666d8b1f9eaf5da0265f43994252c05417a6e6dd9c79a5202016010a0";

// A check returns an empty string on success, otherwise the failure detail.
using Check = std::function<std::string()>;

std::vector<fs::path> allFixtures() {
  std::vector<fs::path> out;
  for (const char* dir : {"corpus", "mapping", "examples"}) {
    for (auto& f : test::fixtureFiles(dir)) {
      if (f.stem() != "broken") out.push_back(f);
    }
  }
  return out;
}

rdf::Graph load(const fs::path& f) { return test::loadFixture(f.lexically_relative(test::fixtureDir())).graph; }

std::string ac1() {
  auto text = profile::normalizeQueryText(profile::embeddedQueryText());
  if (corpus::sha256Hex(text) != kQueryDigest) return "query text digest " + corpus::sha256Hex(text);
  auto q = sparql::parseQuery(profile::embeddedQueryText());
  const auto* select = std::get_if<sparql::SelectAll>(&q->node);
  if (!select) return "not a SELECT *";
  const auto* limit = std::get_if<sparql::Limit>(&select->inner->node);
  if (!limit || limit->count != 1) return "outermost operator is not LIMIT 1";
  auto arms = sparql::unionArms(limit->inner);
  if (arms.size() != 8) return std::to_string(arms.size()) + " union arms";
  return {};
}

std::string ac2() {
  auto expectations = test::corpusExpectations();
  if (expectations.size() < 20) return "only " + std::to_string(expectations.size()) + " fixtures";
  std::set<profile::RuleId> fired;
  std::set<std::string> tagged, divergent;
  std::size_t members = 0;
  for (const auto& e : expectations) {
    fs::path file;
    for (const auto& f : test::fixtureFiles("corpus")) {
      if (f.stem() == e.id) file = f;
    }
    if (file.empty()) return "no file for " + e.id;
    auto g = load(file);
    if (g.size() > 60) return e.id + " has " + std::to_string(g.size()) + " triples";
    auto both = profile::checkBoth(g);
    if (!e.expectedDivergence && both.divergence) return e.id + ": engines disagree";
    if (e.expectedDivergence) tagged.insert(e.id);
    if (both.divergence) divergent.insert(e.id);
    for (auto r : both.direct.rulesFired()) fired.insert(r);
    members += both.direct.member;
  }
  if (tagged != divergent) return "tagged set differs from the divergent set";
  // The tagged fixtures are exactly the two known divergence shapes.
  for (const auto& id : tagged) {
    if (id.find("mincard") == std::string::npos && id.find("right_sharing") == std::string::npos) {
      return id + " is tagged but is neither a minCardinality nor a ?right-sharing fixture";
    }
  }
  if (fired.size() != std::size(profile::kAllRules)) return "not every rule fires somewhere";
  if (members == 0) return "no member fixture";
  return {};
}

std::string ac3() {
  std::mt19937 rng(test::kSeed);
  auto trees = test::randomTrees(rng);
  if (trees.size() < 20) return "too few trees";
  for (int gi = 0; gi < test::kGraphs; ++gi) {
    auto g = test::randomGraph(rng);
    for (const auto& tree : trees) {
      auto got = sparql::evaluate(g, *tree);
      if (const auto* limit = std::get_if<sparql::Limit>(&tree->node)) {
        auto all = test::sortedSolutions(test::naiveEval(g, *limit->inner));
        if (got.size() != std::min(limit->count, all.size())) return "limit count on " + sparql::toSExpression(*tree);
        for (const auto& s : got) {
          if (!std::binary_search(all.begin(), all.end(), s)) return "limit member on " + sparql::toSExpression(*tree);
        }
        continue;
      }
      if (test::sortedSolutions(got) != test::sortedSolutions(test::naiveEval(g, *tree))) {
        return "graph " + std::to_string(gi) + " tree " + sparql::toSExpression(*tree);
      }
    }
  }
  return {};
}

std::string ac4() {
  const auto& cases = test::mappingCases();
  if (cases.size() < 30) return "only " + std::to_string(cases.size()) + " cases";
  for (const auto& c : cases) {
    auto d = test::loadFixture("mapping/" + c.file + ".ttl");
    auto report = dl::extractAxioms(d.graph);
    if (report.axioms.size() != 1 || !(report.axioms[0] == c.expected())) return c.file + ": wrong axiom";
    dl::RenderOptions o{false, &d.prefixes};
    if (dl::render(report.axioms[0], o) != c.unicode) return c.file + ": rendered " + dl::render(report.axioms[0], o);
  }
  return {};
}

std::string ac5() {
  for (const auto& f : allFixtures()) {
    auto g = load(f);
    io::ParseOptions o;
    o.blankScope = "r";
    auto again = io::parseNTriples(io::serializeNTriples(g), o);
    if (!test::isomorphic(g, again)) return f.filename().string() + " is not isomorphic after a round trip";
  }
  return {};
}

std::string ac6() {
  auto manifest = corpus::loadManifest(test::fixtureDir() / "corpus" / "corpus.tsv");
  auto directory = corpus::scanDirectory(test::fixtureDir() / "corpus");
  corpus::BatchConfig serial;
  auto base = corpus::runBatch(manifest, serial);
  if (base.parsedCount != 20 || base.memberDirectCount != 6) {
    return std::to_string(base.memberDirectCount) + "/" + std::to_string(base.parsedCount) + " members";
  }
  if (corpus::fractionLine("direct", base.memberDirectCount, base.parsedCount) != "member (direct): 6/20 (30.0%)") {
    return "summary line";
  }
  for (unsigned jobs : {2u, 8u}) {
    corpus::BatchConfig parallel;
    parallel.jobs = jobs;
    for (const auto* corpus : {&manifest, &directory}) {
      auto other = corpus::runBatch(*corpus, parallel);
      for (auto fmt : {corpus::ReportFormat::Json, corpus::ReportFormat::Csv, corpus::ReportFormat::Markdown}) {
        if (corpus::emitReport(base, fmt) != corpus::emitReport(other, fmt)) {
          return std::string(corpus::reportFormatName(fmt)) + " report differs at -j" + std::to_string(jobs);
        }
      }
    }
  }
  return {};
}

std::string ac7() {
  io::ParseOptions o;
  o.blankScope = "d";
  auto g = io::parseTurtle(
               "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
               "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
               "_:x owl:minCardinality 1 ; owl:onProperty <http://x/R> ; rdfs:subClassOf <http://x/D> .\n",
               o)
               .graph;
  for (const auto& graph : {g, test::loadFixture("examples/mincard_left.ttl").graph}) {
    auto both = profile::checkBoth(graph);
    if (!both.direct.member) return "direct rejects";
    if (both.query.member) return "query accepts";
    if (!both.divergence) return "no divergence";
  }
  return {};
}

std::vector<rdf::Triple> evidenceClosure(const rdf::Graph& g, const profile::Verdict& v) {
  std::vector<rdf::Triple> out;
  for (const auto& x : v.violations) {
    out.insert(out.end(), x.evidence.begin(), x.evidence.end());
    if (x.focus.isBlank()) {
      auto def = g.match({x.focus, std::nullopt, std::nullopt});
      out.insert(out.end(), def.begin(), def.end());
    }
  }
  return out;
}

std::string ac8() {
  std::size_t nonMembers = 0;
  for (const auto& f : allFixtures()) {
    auto g = load(f);
    auto direct = profile::checkDirect(g);
    if (!direct.member) {
      ++nonMembers;
      auto after = profile::checkDirect(g.without(evidenceClosure(g, direct))).rulesFired();
      for (auto r : direct.rulesFired()) {
        if (std::find(after.begin(), after.end(), r) != after.end()) {
          return f.filename().string() + ": " + std::string(profile::ruleName(r)) + " still fires";
        }
      }
    }
    auto query = profile::checkQuery(g);
    if (!query.member) {
      const auto& first = query.violations.front();
      for (const auto& x : profile::checkQuery(g.without(evidenceClosure(g, query))).violations) {
        if (x.rule == first.rule && x.focus == first.focus) {
          return f.filename().string() + ": query violation survives evidence removal";
        }
      }
    }
  }
  if (nonMembers == 0) return "no non-member fixtures";
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::chrono::milliseconds budget;
    Check check;
  };
  using std::chrono::milliseconds;
  const std::vector<Criterion> criteria = {
      {"AC1", "query fidelity", milliseconds(1000), ac1},
      {"AC2", "dual-oracle agreement", milliseconds(5000), ac2},
      {"AC3", "SPARQL semantics oracle", milliseconds(60000), ac3},
      {"AC4", "DL mapping coverage", milliseconds(5000), ac4},
      {"AC5", "round-trip", milliseconds(5000), ac5},
      {"AC6", "experiment analogue", milliseconds(10000), ac6},
      {"AC7", "strict-semantics regression", milliseconds(1000), ac7},
      {"AC8", "violation soundness", milliseconds(10000), ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto elapsed = std::chrono::duration_cast<milliseconds>(std::chrono::steady_clock::now() - start);
    if (detail.empty() && elapsed > c.budget) {
      detail = "took " + std::to_string(elapsed.count()) + " ms, budget " + std::to_string(c.budget.count()) + " ms";
    }
    bool pass = detail.empty();
    failures += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << " " << c.title << " (" << elapsed.count() << " ms)";
    if (!pass) std::cout << ": " << detail;
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
