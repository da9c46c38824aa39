#include "opa/cli/Cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "opa/corpus/Harness.h"
#include "opa/corpus/Report.h"
#include "opa/dl/Extractor.h"
#include "opa/dl/Renderer.h"
#include "opa/io/RdfIo.h"
#include "opa/profile/Checker.h"
#include "opa/profile/EmbeddedQuery.h"
#include "opa/profile/Report.h"
#include "opa/sparql/Evaluator.h"
#include "opa/sparql/QueryParser.h"

namespace opa::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Aborts a command with exit code 2 after the message is printed.
struct Failure {
  std::string message;
};

io::TurtleDocument loadInput(const std::string& path) {
  io::ParseOptions options;
  options.blankScope = "d";
  try {
    return io::loadDocument(path, options);
  } catch (const io::LoadError& e) {
    throw Failure{e.what()};
  } catch (const io::ParseError& e) {
    throw Failure{(path == "-" ? std::string("<stdin>") : path) + ":" + e.what()};
  }
}

std::string displayName(const std::string& path) { return path == "-" ? "<stdin>" : path; }

std::vector<std::string> lettersOf(const rdf::Graph& g) {
  return dl::letterNames(dl::expressivityLetters(g));
}

std::string joined(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string path;
  std::string engine = "both";
  std::string format = "text";
};

void printVerdict(std::ostream& out, const profile::Verdict& v) {
  out << "  " << profile::engineName(v.engine) << ": " << (v.member ? "member" : "non-member")
      << '\n';
  for (const auto& violation : v.violations) {
    out << "    [" << profile::ruleName(violation.rule) << "] " << violation.focus.toNTriples()
        << '\n'
        << "      " << violation.message << '\n';
    for (const auto& t : violation.evidence) {
      out << "      " << t.subject.toNTriples() << ' ' << t.predicate.toNTriples() << ' '
          << t.object.toNTriples() << " .\n";
    }
  }
}

int cmdCheck(const CheckArgs& args, std::ostream& out) {
  auto doc = loadInput(args.path);
  std::optional<profile::Verdict> direct, query;
  if (args.engine != "query") direct = profile::checkDirect(doc.graph);
  if (args.engine != "direct") query = profile::checkQuery(doc.graph);
  bool member = direct ? direct->member : query->member;

  if (args.format == "json") {
    out << profile::verdictReport(displayName(args.path), direct ? &*direct : nullptr,
                                  query ? &*query : nullptr, lettersOf(doc.graph))
               .dump(2)
        << '\n';
  } else {
    out << displayName(args.path) << '\n';
    if (direct) printVerdict(out, *direct);
    if (query) printVerdict(out, *query);
    if (direct && query) {
      out << "  divergence: " << (direct->member != query->member ? "true" : "false") << '\n';
    }
  }
  return member ? kOk : kNonMember;
}

// ---- query ---------------------------------------------------------------

struct QueryArgs {
  std::string ontology;
  std::string queryPath;
  bool builtin = false;
  bool explain = false;
  std::string format = "text";
};

int cmdQuery(const QueryArgs& args, std::ostream& out) {
  if (args.builtin == !args.queryPath.empty()) {
    throw Failure{"give either a query file or --builtin"};
  }
  sparql::AlgebraPtr algebra;
  if (args.builtin) {
    algebra = profile::embeddedQuery();
  } else {
    std::string text;
    try {
      text = io::readSource(args.queryPath);
    } catch (const io::LoadError& e) {
      throw Failure{e.what()};
    }
    try {
      algebra = sparql::parseQuery(text);
    } catch (const io::ParseError& e) {
      throw Failure{args.queryPath + ":" + e.what()};
    }
  }
  auto doc = loadInput(args.ontology);
  if (args.explain) out << sparql::toSExpression(*algebra) << '\n';

  auto vars = sparql::variablesOf(*algebra);
  auto rows = sparql::evaluate(doc.graph, *algebra);

  if (args.format == "json") {
    json j;
    j["variables"] = json::array();
    for (const auto& v : vars) j["variables"].push_back(v.name);
    j["rows"] = json::array();
    for (const auto& row : rows) {
      json r = json::object();
      for (const auto& [var, term] : row) r[var.name] = term.toNTriples();
      j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& v : vars) width.push_back(v.name.size() + 1);
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto it = row.find(vars[i]);
      line.push_back(it == row.end() ? "" : it->second.toNTriples());
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << (i ? " | " : "| ") << std::left << std::setw(static_cast<int>(width[i])) << line[i];
    }
    out << " |\n";
  };
  std::vector<std::string> header;
  for (const auto& v : vars) header.push_back("?" + v.name);
  if (!vars.empty()) {
    emit(header);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      out << (i ? "-|-" : "|-") << std::string(width[i], '-');
    }
    out << "-|\n";
  }
  for (const auto& line : cells) emit(line);
  out << rows.size() << (rows.size() == 1 ? " row" : " rows") << '\n';
  return kOk;
}

// ---- inventory / render --------------------------------------------------

struct InventoryArgs {
  std::string path;
  std::string format = "text";
  bool ascii = false;
};

dl::ExtractionReport extract(const rdf::Graph& g) {
  try {
    return dl::extractAxioms(g);
  } catch (const dl::ExtractionError& e) {
    throw Failure{std::string(e.what()) + " (list head " + e.listHead().toNTriples() + ")"};
  }
}

int cmdInventory(const InventoryArgs& args, std::ostream& out) {
  auto doc = loadInput(args.path);
  auto report = extract(doc.graph);
  std::map<std::string, std::size_t> byKind;
  for (const auto& a : report.axioms) ++byKind[std::string(dl::axiomKindName(a.kind))];
  auto letters = dl::letterNames(report.letters);
  dl::RenderOptions options;
  options.ascii = args.ascii;
  options.prefixes = &doc.prefixes;
  std::vector<std::string> rendered;
  for (const auto& a : report.axioms) rendered.push_back(dl::render(a, options));

  if (args.format == "json") {
    json j{{"source", displayName(args.path)},
           {"triples", doc.graph.size()},
           {"axioms", report.axioms.size()},
           {"axiom_kinds", byKind},
           {"axiom_list", rendered},
           {"consumed", report.consumed.size()},
           {"scaffolding", report.scaffolding.size()},
           {"unmapped", report.unmapped.size()},
           {"letters", letters},
           {"family", dl::familyName(report.letters)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "source: " << displayName(args.path) << '\n'
      << "triples: " << doc.graph.size() << '\n'
      << "axioms: " << report.axioms.size() << '\n';
  for (const auto& [kind, n] : byKind) out << "  " << kind << ": " << n << '\n';
  for (const auto& line : rendered) out << "  | " << line << '\n';
  out << "consumed: " << report.consumed.size() << '\n'
      << "scaffolding: " << report.scaffolding.size() << '\n'
      << "unmapped: " << report.unmapped.size() << '\n'
      << "letters: " << joined(letters, " ") << '\n'
      << "family: " << dl::familyName(report.letters) << '\n';
  return kOk;
}

struct RenderArgs {
  std::string path;
  bool ascii = false;
};

int cmdRender(const RenderArgs& args, std::ostream& out) {
  auto doc = loadInput(args.path);
  auto report = extract(doc.graph);
  dl::RenderOptions options;
  options.ascii = args.ascii;
  options.prefixes = &doc.prefixes;
  for (const auto& a : report.axioms) out << dl::render(a, options) << '\n';
  return kOk;
}

// ---- batch ---------------------------------------------------------------

struct BatchArgs {
  std::string corpus;
  std::string outDir;
  std::vector<std::string> formats;
  unsigned jobs = 1;
  bool offline = false;
  std::string cacheDir;
  double timeoutSeconds = 30;
};

int cmdBatch(const BatchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<corpus::ReportFormat> formats;
  for (const auto& f : args.formats.empty() ? std::vector<std::string>{"json"} : args.formats) {
    auto parsed = corpus::parseReportFormat(f);
    if (!parsed) throw Failure{"unknown report format '" + f + "'"};
    formats.push_back(*parsed);
  }
  std::vector<corpus::CorpusEntry> entries;
  try {
    entries = corpus::loadCorpus(args.corpus);
  } catch (const corpus::CorpusError& e) {
    throw Failure{e.what()};
  }

  corpus::BatchConfig config;
  config.jobs = std::max(1u, args.jobs);
  config.entryTimeout =
      std::chrono::milliseconds(static_cast<long long>(args.timeoutSeconds * 1000.0));
  config.fetch.offline = args.offline;
  if (!args.cacheDir.empty()) {
    config.fetch.cacheDir = args.cacheDir;
  } else if (const char* env = std::getenv("OPA_CACHE_DIR"); env && *env) {
    config.fetch.cacheDir = env;
  }
  auto report = corpus::runBatch(entries, config);

  // Without --out the report itself is the output and the summary goes to
  // stderr, so stdout stays machine-readable.
  std::ostream& summary = args.outDir.empty() ? err : out;
  if (args.outDir.empty()) {
    for (auto f : formats) out << corpus::emitReport(report, f);
  } else {
    std::error_code ec;
    fs::create_directories(args.outDir, ec);
    for (auto f : formats) {
      fs::path file = fs::path(args.outDir) / ("report." + std::string(corpus::reportExtension(f)));
      std::ofstream os(file, std::ios::binary | std::ios::trunc);
      os << corpus::emitReport(report, f);
      if (!os) throw Failure{"cannot write " + file.string()};
      summary << "wrote " << file.string() << '\n';
    }
  }
  summary << "entries: " << report.entries.size() << ", parsed: " << report.parsedCount
          << ", unreadable: " << report.unreadableCount << '\n'
          << corpus::fractionLine("direct", report.memberDirectCount, report.parsedCount) << '\n'
          << corpus::fractionLine("query", report.memberQueryCount, report.parsedCount) << '\n'
          << "divergent: " << report.divergenceCount << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syntactic profile checker for OWL ontologies", "opa"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* checkCmd = app.add_subcommand("check", "Decide profile membership");
  checkCmd->add_option("path", check.path, "Ontology file, or - for stdin")->required();
  checkCmd->add_option("--engine", check.engine, "direct, query or both")
      ->check(CLI::IsMember({"direct", "query", "both"}));
  checkCmd->add_option("--format", check.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  QueryArgs query;
  auto* queryCmd = app.add_subcommand("query", "Run a SPARQL query against an ontology");
  queryCmd->add_option("ontology", query.ontology, "Ontology file")->required();
  queryCmd->add_option("query", query.queryPath, "Query file");
  queryCmd->add_flag("--builtin", query.builtin, "Use the embedded membership query");
  queryCmd->add_flag("--explain", query.explain, "Print the algebra before the results");
  queryCmd->add_option("--format", query.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  InventoryArgs inventory;
  auto* inventoryCmd = app.add_subcommand("inventory", "Count extracted axioms and DL letters");
  inventoryCmd->add_option("path", inventory.path, "Ontology file")->required();
  inventoryCmd->add_option("--format", inventory.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  inventoryCmd->add_flag("--ascii", inventory.ascii, "ASCII operators");

  RenderArgs render;
  auto* renderCmd = app.add_subcommand("render", "Print the ontology as DL axioms");
  renderCmd->add_option("path", render.path, "Ontology file, or - for stdin")->required();
  renderCmd->add_flag("--ascii", render.ascii, "ASCII operators");

  BatchArgs batch;
  auto* batchCmd = app.add_subcommand("batch", "Check every ontology of a corpus");
  batchCmd->add_option("corpus", batch.corpus, "Manifest (id<TAB>source) or directory")
      ->required();
  batchCmd->add_option("--out", batch.outDir, "Directory for report files");
  batchCmd->add_option("--format", batch.formats, "json, csv or markdown (repeatable)");
  batchCmd->add_option("--jobs,-j", batch.jobs, "Parallel workers")->check(CLI::Range(1u, 256u));
  batchCmd->add_flag("--offline", batch.offline, "Serve URLs from the cache only");
  batchCmd->add_option("--cache-dir", batch.cacheDir, "Download cache (default $OPA_CACHE_DIR)");
  batchCmd->add_option("--timeout", batch.timeoutSeconds, "Seconds per entry")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "opa: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kError;
  }

  try {
    if (checkCmd->parsed()) return cmdCheck(check, out);
    if (queryCmd->parsed()) return cmdQuery(query, out);
    if (inventoryCmd->parsed()) return cmdInventory(inventory, out);
    if (renderCmd->parsed()) return cmdRender(render, out);
    if (batchCmd->parsed()) return cmdBatch(batch, out, err);
  } catch (const Failure& f) {
    err << "opa: " << f.message << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "opa: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace opa::cli
