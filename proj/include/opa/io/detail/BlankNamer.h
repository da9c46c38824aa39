#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "opa/rdf/Term.h"

namespace opa::io::detail {

/// Maps document labels into a load-scoped namespace. User labels become
/// `scope.label`; generated nodes become `scope..N`, which no user label can
/// produce because labels never start with '.'.
class BlankNamer {
 public:
  explicit BlankNamer(std::string scope) : scope_(std::move(scope)) {
    if (scope_.empty()) {
      static std::atomic<std::uint64_t> counter{0};
      scope_ = "s" + std::to_string(counter.fetch_add(1));
    }
    if (scope_.find('.') != std::string::npos) {
      throw std::invalid_argument("blank node scope must not contain '.'");
    }
  }
  rdf::Term named(const std::string& label) const { return rdf::Term::blank(scope_ + "." + label); }
  rdf::Term fresh() { return rdf::Term::blank(scope_ + ".." + std::to_string(next_++)); }

 private:
  std::string scope_;
  std::uint64_t next_ = 0;
};

}  // namespace opa::io::detail
