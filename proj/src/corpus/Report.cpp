#include "opa/corpus/Report.h"

#include <cstdio>
#include <sstream>

#include "opa/profile/Report.h"

namespace opa::corpus {

using nlohmann::json;

std::optional<ReportFormat> parseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string_view reportFormatName(ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Markdown: return "markdown";
  }
  return "json";
}

std::string_view reportExtension(ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Markdown: return "md";
  }
  return "json";
}

namespace {

json optionalNumber(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string joined(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::vector<std::string> rulesFired(const EntryResult& e) {
  std::vector<std::string> out;
  if (!e.parsed()) return out;
  for (auto rule : profile::kAllRules) {
    bool fired = false;
    for (const auto* v : {&e.verdicts->direct, &e.verdicts->query}) {
      for (const auto& violation : v->violations) fired |= violation.rule == rule;
    }
    if (fired) out.emplace_back(profile::ruleName(rule));
  }
  return out;
}

std::string csvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string mdCell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

json toJson(const RunReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json item;
    if (e.parsed()) {
      item = profile::verdictReport(e.entry.source, &e.verdicts->direct, &e.verdicts->query,
                                    e.letters);
    } else {
      item = profile::verdictReport(e.entry.source, nullptr, nullptr, e.letters);
    }
    item["id"] = e.entry.id;
    item["format"] = entryFormatName(e.format);
    item["parsed"] = e.parsed();
    item["error"] = e.error.empty() ? json(nullptr) : json(e.error);
    item["triples"] = e.tripleCount;
    entries.push_back(std::move(item));
  }
  json summary = {{"entries", report.entries.size()},
                  {"parsed", report.parsedCount},
                  {"unreadable_count", report.unreadableCount},
                  {"member_direct", report.memberDirectCount},
                  {"member_query", report.memberQueryCount},
                  {"divergence", report.divergenceCount},
                  {"member_fraction_direct", optionalNumber(report.memberFractionDirect)},
                  {"member_fraction_query", optionalNumber(report.memberFractionQuery)}};
  return {{"entries", std::move(entries)}, {"summary", std::move(summary)}};
}

std::string fractionLine(std::string_view engine, std::size_t members, std::size_t parsed) {
  std::string out = "member (" + std::string(engine) + "): " + std::to_string(members) + "/" +
                    std::to_string(parsed);
  if (parsed == 0) return out + " (n/a)";
  char pct[32];
  std::snprintf(pct, sizeof pct, " (%.1f%%)", 100.0 * static_cast<double>(members) /
                                                  static_cast<double>(parsed));
  return out + pct;
}

std::string emitReport(const RunReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json:
      out << toJson(report).dump(2) << '\n';
      break;
    case ReportFormat::Csv:
      out << "id,parsed,member_direct,member_query,divergence,rules_fired,letters\n";
      for (const auto& e : report.entries) {
        out << csvField(e.entry.id) << ',' << flag(e.parsed()) << ',';
        if (e.parsed()) {
          out << flag(e.verdicts->direct.member) << ',' << flag(e.verdicts->query.member) << ','
              << flag(e.verdicts->divergence);
        } else {
          out << ",,";
        }
        out << ',' << csvField(joined(rulesFired(e), ";")) << ','
            << csvField(joined(e.letters, ";")) << '\n';
      }
      break;
    case ReportFormat::Markdown:
      out << "| Ontology | Triples | Member (direct) | Member (query) | Divergence | Rules | DL |\n"
          << "|---|---:|:---:|:---:|:---:|---|---|\n";
      for (const auto& e : report.entries) {
        if (!e.parsed()) {
          out << "| " << mdCell(e.entry.id) << " | | | | | unreadable: " << mdCell(e.error)
              << " | |\n";
          continue;
        }
        const auto& v = *e.verdicts;
        std::string id = mdCell(e.entry.id);
        if (v.direct.member) id = "**" + id + "**";
        out << "| " << id << " | " << e.tripleCount << " | " << (v.direct.member ? "yes" : "no")
            << " | " << (v.query.member ? "yes" : "no") << " | " << (v.divergence ? "yes" : "")
            << " | " << joined(rulesFired(e), ", ") << " | " << joined(e.letters, " ") << " |\n";
      }
      out << "\n" << fractionLine("direct", report.memberDirectCount, report.parsedCount) << "; "
          << fractionLine("query", report.memberQueryCount, report.parsedCount) << "; unreadable: "
          << report.unreadableCount << "\n";
      break;
  }
  return out.str();
}

}  // namespace opa::corpus
