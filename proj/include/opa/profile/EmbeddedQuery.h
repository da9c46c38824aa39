#pragma once

#include <string>
#include <string_view>

#include "opa/sparql/Algebra.h"

namespace opa::profile {

/// The membership query exactly as shipped in resources/profile_query.rq.
/// A non-empty result means the ontology is rejected.
std::string_view embeddedQueryText();

/// LF line endings, trailing whitespace stripped from every line, trailing
/// blank lines dropped.
std::string normalizeQueryText(std::string_view text);

/// The embedded query parsed once; shared by every caller.
const sparql::AlgebraPtr& embeddedQuery();

}  // namespace opa::profile
