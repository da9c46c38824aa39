#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "opa/io/RdfIo.h"

namespace opa::test {

inline std::filesystem::path fixtureDir() { return OPA_FIXTURE_DIR; }

inline io::TurtleDocument loadFixture(const std::filesystem::path& relative) {
  io::ParseOptions options;
  options.blankScope = "d";
  return io::loadDocument(fixtureDir() / relative, options);
}

/// All .ttl/.nt files under a fixture subdirectory, sorted.
inline std::vector<std::filesystem::path> fixtureFiles(const std::string& subdir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(fixtureDir() / subdir)) {
    auto ext = e.path().extension();
    if (ext == ".ttl" || ext == ".nt") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CorpusExpectation {
  std::string id;
  bool memberDirect = false;
  bool memberQuery = false;
  std::vector<std::string> rules;  // short names, e.g. "R1"
  bool expectedDivergence = false;
};

std::vector<CorpusExpectation> corpusExpectations();

}  // namespace opa::test
