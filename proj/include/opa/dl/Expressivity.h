#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "opa/rdf/Graph.h"

namespace opa::dl {

/// Expressivity feature tags, declared in naming order.
enum class Letter { AL, C, S, H, O, I, F, N, Q, R, D };

using LetterSet = std::set<Letter>;

std::string_view letterName(Letter letter);

/// Tags detected from predicate and object occurrences. AL is always
/// present; S requires the C conditions and brings C with it; Q
/// suppresses N.
LetterSet expressivityLetters(const rdf::Graph& graph);

/// Tag names in canonical order, e.g. {"AL", "C", "H"}.
std::vector<std::string> letterNames(const LetterSet& letters);

/// Conventional family name: "AL" or "ALC", with "S" replacing "ALC"
/// when transitivity is present, then H, O, I, F, N or Q, R and "(D)".
std::string familyName(const LetterSet& letters);

}  // namespace opa::dl
