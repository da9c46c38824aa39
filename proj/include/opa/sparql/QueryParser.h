#pragma once

#include <string_view>

#include "opa/io/ParseError.h"
#include "opa/sparql/Algebra.h"

namespace opa::sparql {

/// Parses a `SELECT *` query in the supported fragment (PREFIX/BASE,
/// basic graph patterns with `;` and `,` shorthands, nested groups, UNION,
/// MINUS, FILTER with a numeric comparison, LIMIT) into algebra.
///
/// Group translation follows the standard rules: triple blocks and
/// sub-groups are joined left to right, MINUS applies to everything before
/// it in the group, and FILTERs wrap the whole group they appear in.
///
/// Throws io::ParseError; unsupported constructs (OPTIONAL, GROUP BY, ...)
/// name the feature in the message.
AlgebraPtr parseQuery(std::string_view text);

}  // namespace opa::sparql
