#include "opa/io/Iri.h"

#include <cctype>

namespace opa::io {

bool isAbsoluteIri(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

namespace {

bool hasDotSegment(std::string_view ref) {
  std::size_t start = 0;
  while (start <= ref.size()) {
    auto end = ref.find_first_of("/?#", start);
    auto seg = ref.substr(start, end == std::string_view::npos ? ref.npos : end - start);
    if (seg == "." || seg == "..") return true;
    if (end == std::string_view::npos || ref[end] != '/') break;
    start = end + 1;
  }
  return false;
}

}  // namespace

std::optional<std::string> resolveIri(std::string_view ref, std::string_view base) {
  if (isAbsoluteIri(ref)) return std::string(ref);
  if (!isAbsoluteIri(base)) return std::nullopt;

  std::string_view noFragment = base.substr(0, base.find('#'));
  if (ref.empty()) return std::string(noFragment);
  if (ref[0] == '#') return std::string(noFragment) + std::string(ref);
  if (ref[0] == '?' || ref.starts_with("//") || hasDotSegment(ref)) return std::nullopt;

  std::string_view noQuery = noFragment.substr(0, noFragment.find('?'));
  auto schemeEnd = noQuery.find(':');
  std::string_view scheme = noQuery.substr(0, schemeEnd + 1);
  std::string_view rest = noQuery.substr(schemeEnd + 1);
  std::string_view authority;
  std::string_view path = rest;
  if (rest.starts_with("//")) {
    auto slash = rest.find('/', 2);
    authority = rest.substr(0, slash);
    path = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash);
  }

  if (ref[0] == '/') return std::string(scheme) + std::string(authority) + std::string(ref);

  std::string dir;
  auto lastSlash = path.rfind('/');
  if (lastSlash != std::string_view::npos) {
    dir = std::string(path.substr(0, lastSlash + 1));
  } else if (!authority.empty()) {
    dir = "/";
  }
  return std::string(scheme) + std::string(authority) + dir + std::string(ref);
}

}  // namespace opa::io
