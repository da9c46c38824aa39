#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "opa/profile/Checker.h"

namespace opa::profile {

nlohmann::json toJson(const Violation& v, Engine engine);

/// The per-ontology report:
/// `{source, member_direct, member_query, divergence, violations, letters}`.
/// A verdict that was not computed serializes as null; `divergence` is null
/// unless both are present. Violations list the direct engine's first, each
/// tagged with its engine.
nlohmann::json verdictReport(const std::string& source, const Verdict* direct,
                             const Verdict* query, const std::vector<std::string>& letters);

}  // namespace opa::profile
