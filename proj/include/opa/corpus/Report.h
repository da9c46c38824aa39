#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "opa/corpus/Harness.h"

namespace opa::corpus {

enum class ReportFormat { Json, Csv, Markdown };

std::optional<ReportFormat> parseReportFormat(std::string_view name);
std::string_view reportFormatName(ReportFormat f);
/// File extension without the dot.
std::string_view reportExtension(ReportFormat f);

/// `{"entries": [...], "summary": {...}}`. Each entry carries id, format,
/// parsed, error and the per-ontology verdict fields. No timestamps, so equal
/// runs give equal bytes.
nlohmann::json toJson(const RunReport& report);

std::string emitReport(const RunReport& report, ReportFormat format);

/// `member (direct): 6/20 (30.0%)`, or `0/0 (n/a)` when nothing parsed.
std::string fractionLine(std::string_view engine, std::size_t members, std::size_t parsed);

}  // namespace opa::corpus
