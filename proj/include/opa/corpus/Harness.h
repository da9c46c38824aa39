#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "opa/corpus/Fetcher.h"
#include "opa/profile/Checker.h"

namespace opa::corpus {

struct CorpusEntry {
  std::string id;
  /// Local path or http(s) URL.
  std::string source;
};

/// Raised for an unusable manifest or directory.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `id<TAB>source` lines; blank lines and `#` comments are skipped.
/// Relative paths resolve against the manifest's directory.
std::vector<CorpusEntry> loadManifest(const std::filesystem::path& manifest);
std::vector<CorpusEntry> parseManifest(std::string_view text,
                                       const std::filesystem::path& baseDir = {});

/// Every .ttl/.nt/.owl/.rdf file directly inside `dir`; the id is the file
/// stem, or the full file name when two stems collide.
std::vector<CorpusEntry> scanDirectory(const std::filesystem::path& dir);

/// A manifest file or a directory.
std::vector<CorpusEntry> loadCorpus(const std::filesystem::path& path);

enum class EntryFormat { Turtle, NTriples, Unreadable };
std::string_view entryFormatName(EntryFormat f);

struct EntryResult {
  CorpusEntry entry;
  EntryFormat format = EntryFormat::Unreadable;
  /// Why the entry is unreadable; empty once parsed and checked.
  std::string error;
  std::size_t tripleCount = 0;
  std::optional<profile::DualVerdict> verdicts;
  std::vector<std::string> letters;

  bool parsed() const { return verdicts.has_value(); }
};

struct RunReport {
  /// Sorted by id.
  std::vector<EntryResult> entries;
  std::size_t parsedCount = 0;
  std::size_t unreadableCount = 0;
  std::size_t memberDirectCount = 0;
  std::size_t memberQueryCount = 0;
  std::size_t divergenceCount = 0;
  /// Over parsed entries; absent when nothing parsed.
  std::optional<double> memberFractionDirect;
  std::optional<double> memberFractionQuery;
};

struct BatchConfig {
  unsigned jobs = 1;
  /// Parse plus check budget per entry.
  std::chrono::milliseconds entryTimeout{30000};
  FetchOptions fetch;
};

/// Checks each entry with both engines. Per-entry failures are recorded in
/// the report; only a duplicate id is an error. `fetcher` may be supplied to
/// observe request counts, otherwise one is built from `config.fetch`.
RunReport runBatch(const std::vector<CorpusEntry>& corpus, const BatchConfig& config = {},
                   Fetcher* fetcher = nullptr);

/// Recomputes the aggregate fields from `entries`.
void summarize(RunReport& report);

}  // namespace opa::corpus
