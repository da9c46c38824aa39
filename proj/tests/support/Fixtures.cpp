#include "Fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opa::test {

std::vector<CorpusExpectation> corpusExpectations() {
  std::ifstream in(fixtureDir() / "corpus" / "expected.tsv");
  if (!in) throw std::runtime_error("missing corpus/expected.tsv");
  std::vector<CorpusExpectation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, direct, query, rules, tags;
    std::getline(fields, id, '\t');
    std::getline(fields, direct, '\t');
    std::getline(fields, query, '\t');
    std::getline(fields, rules, '\t');
    std::getline(fields, tags, '\t');
    CorpusExpectation e;
    e.id = id;
    e.memberDirect = direct == "true";
    e.memberQuery = query == "true";
    if (rules != "-") {
      std::istringstream list(rules);
      for (std::string r; std::getline(list, r, ',');) e.rules.push_back(r);
    }
    e.expectedDivergence = tags.find("expected-divergence") != std::string::npos;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace opa::test
