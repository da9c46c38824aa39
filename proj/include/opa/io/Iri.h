#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace opa::io {

/// True when `text` starts with an RFC 3986 scheme followed by ':'.
bool isAbsoluteIri(std::string_view text);

/// Resolves `ref` against `base`. Supports the empty reference, fragment-only
/// references, path-absolute (`/a/b`) and path-relative (`a/b`) references.
/// Returns nullopt for forms outside that subset (network-path `//host`,
/// query-only, dot segments) or when `base` is not absolute.
std::optional<std::string> resolveIri(std::string_view ref, std::string_view base);

}  // namespace opa::io
