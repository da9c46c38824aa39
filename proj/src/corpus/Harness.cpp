#include "opa/corpus/Harness.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "opa/dl/Expressivity.h"
#include "opa/io/RdfIo.h"

namespace opa::corpus {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool corpusExtension(const fs::path& p) {
  static const std::set<std::string> kExt{".ttl", ".nt", ".owl", ".rdf"};
  return kExt.count(p.extension().string()) > 0;
}

void requireUniqueIds(const std::vector<CorpusEntry>& entries) {
  std::set<std::string_view> seen;
  for (const auto& e : entries) {
    if (!seen.insert(e.id).second) throw CorpusError("duplicate corpus id '" + e.id + "'");
  }
}

}  // namespace

std::vector<CorpusEntry> parseManifest(std::string_view text, const fs::path& baseDir) {
  std::vector<CorpusEntry> out;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw CorpusError("manifest line " + std::to_string(lineNo) + ": expected id<TAB>source");
    }
    std::string id(trim(line.substr(0, tab)));
    std::string source(trim(line.substr(tab + 1)));
    if (id.empty() || source.empty()) {
      throw CorpusError("manifest line " + std::to_string(lineNo) + ": empty id or source");
    }
    if (!isUrl(source) && source != "-") {
      fs::path p(source);
      if (p.is_relative() && !baseDir.empty()) source = (baseDir / p).lexically_normal().string();
    }
    out.push_back({std::move(id), std::move(source)});
  }
  requireUniqueIds(out);
  return out;
}

std::vector<CorpusEntry> loadManifest(const fs::path& manifest) {
  std::string text;
  try {
    text = io::readSource(manifest);
  } catch (const io::LoadError& e) {
    throw CorpusError(e.what());
  }
  return parseManifest(text, manifest.parent_path());
}

std::vector<CorpusEntry> scanDirectory(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw CorpusError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& item : fs::directory_iterator(dir, ec)) {
    if (item.is_regular_file() && corpusExtension(item.path())) files.push_back(item.path());
  }
  if (ec) throw CorpusError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  std::map<std::string, int> stems;
  for (const auto& f : files) ++stems[f.stem().string()];
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    std::string stem = f.stem().string();
    out.push_back({stems[stem] > 1 ? f.filename().string() : stem, f.string()});
  }
  requireUniqueIds(out);
  return out;
}

std::vector<CorpusEntry> loadCorpus(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) return scanDirectory(path);
  if (!fs::exists(path, ec)) throw CorpusError("no such manifest or directory: " + path.string());
  return loadManifest(path);
}

std::string_view entryFormatName(EntryFormat f) {
  switch (f) {
    case EntryFormat::Turtle: return "turtle";
    case EntryFormat::NTriples: return "ntriples";
    case EntryFormat::Unreadable: return "unreadable";
  }
  return "unreadable";
}

namespace {

EntryResult processEntry(const CorpusEntry& entry, const BatchConfig& config, Fetcher& fetcher) {
  EntryResult r;
  r.entry = entry;
  std::string content;
  fs::path path;
  if (isUrl(entry.source)) {
    FetchResult fetched = fetcher.fetch(entry.source);
    if (!fetched.ok) {
      r.error = "fetch failed: " + fetched.error;
      return r;
    }
    content = std::move(fetched.body);
    // The URL path rarely carries a usable extension; let the content decide.
    path = "download";
  } else {
    try {
      content = io::readSource(entry.source);
    } catch (const io::LoadError& e) {
      r.error = e.what();
      return r;
    }
    path = entry.source;
  }

  io::Format format = io::detectFormat(path, content);
  util::Deadline deadline(config.entryTimeout);
  try {
    io::ParseOptions parse;
    parse.blankScope = "d";
    parse.deadline = &deadline;
    io::TurtleDocument doc = io::parseDocument(content, format, parse);
    profile::CheckOptions check;
    check.deadline = &deadline;
    profile::DualVerdict verdicts = profile::checkBoth(doc.graph, check);
    r.letters = dl::letterNames(dl::expressivityLetters(doc.graph));
    r.tripleCount = doc.graph.size();
    r.format = format == io::Format::NTriples ? EntryFormat::NTriples : EntryFormat::Turtle;
    r.verdicts = std::move(verdicts);
  } catch (const io::ParseError& e) {
    r.error = std::string("parse error: ") + e.what();
  } catch (const util::DeadlineExceeded&) {
    r.error = "timed out after " + std::to_string(config.entryTimeout.count()) + " ms";
  }
  return r;
}

}  // namespace

void summarize(RunReport& report) {
  report.parsedCount = report.unreadableCount = 0;
  report.memberDirectCount = report.memberQueryCount = report.divergenceCount = 0;
  for (const auto& e : report.entries) {
    if (!e.parsed()) {
      ++report.unreadableCount;
      continue;
    }
    ++report.parsedCount;
    report.memberDirectCount += e.verdicts->direct.member;
    report.memberQueryCount += e.verdicts->query.member;
    report.divergenceCount += e.verdicts->divergence;
  }
  report.memberFractionDirect.reset();
  report.memberFractionQuery.reset();
  if (report.parsedCount > 0) {
    double n = static_cast<double>(report.parsedCount);
    report.memberFractionDirect = static_cast<double>(report.memberDirectCount) / n;
    report.memberFractionQuery = static_cast<double>(report.memberQueryCount) / n;
  }
}

RunReport runBatch(const std::vector<CorpusEntry>& corpus, const BatchConfig& config,
                   Fetcher* fetcher) {
  requireUniqueIds(corpus);
  Fetcher own(config.fetch);
  Fetcher& use = fetcher ? *fetcher : own;

  std::vector<EntryResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      try {
        results[i] = processEntry(corpus[i], config, use);
      } catch (const std::exception& e) {
        results[i].entry = corpus[i];
        results[i].error = e.what();
      }
    }
  };
  std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(corpus.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RunReport report;
  report.entries = std::move(results);
  std::sort(report.entries.begin(), report.entries.end(),
            [](const EntryResult& a, const EntryResult& b) { return a.entry.id < b.entry.id; });
  summarize(report);
  return report;
}

}  // namespace opa::corpus
