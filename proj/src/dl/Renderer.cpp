#include "opa/dl/Renderer.h"

#include "opa/rdf/Vocabulary.h"

namespace opa::dl {

namespace {

struct Symbols {
  const char* sub;
  const char* equiv;
  const char* conj;
  const char* disj;
  const char* neg;
  const char* forall;
  const char* exists;
  const char* top;
  const char* bottom;
  const char* atMost;
  const char* atLeast;
  const char* inverse;
  const char* compose;
  const char* plus;
};

constexpr Symbols kUnicode{" ⊑ ", " ≡ ", " ⊓ ", " ⊔ ", "¬", "∀", "∃", "⊤", "⊥",
                           "≤",   "≥",   "⁻",   " ∘ ", "⁺"};
constexpr Symbols kAscii{" <= ",  " == ",     " AND ", " OR ", "NOT ", "FORALL ", "EXISTS ",
                         "TOP",   "BOTTOM",   "MAX ",  "MIN ", "^-",   " o ",     "^+"};

class Renderer {
 public:
  explicit Renderer(const RenderOptions& options)
      : options_(options), sym_(options.ascii ? kAscii : kUnicode) {}

  std::string term(const rdf::Term& t) const {
    if (t.isBlank()) return "_:" + t.value();
    if (t.isLiteral()) {
      std::string out = "\"" + rdf::escapeLiteral(t.value()) + "\"";
      if (!t.language().empty()) return out + "@" + t.language();
      if (t.datatype() == vocab::kXsdString) return out;
      return out + "^^" + iri(t.datatype());
    }
    return iri(t.value());
  }

  std::string conceptText(const Concept& c) const {
    switch (c.kind) {
      case ConceptKind::Atomic: return term(c.names.front());
      case ConceptKind::Top: return sym_.top;
      case ConceptKind::Bottom: return sym_.bottom;
      case ConceptKind::Not: return sym_.neg + nested(c.operands.front());
      case ConceptKind::And:
      case ConceptKind::Or: {
        std::string out;
        for (const auto& op : c.operands) {
          if (!out.empty()) out += c.kind == ConceptKind::And ? sym_.conj : sym_.disj;
          out += nested(op);
        }
        return out;
      }
      case ConceptKind::Nominal: return nominal(c.names);
      case ConceptKind::Exists:
        return sym_.exists + roleText(c.roles.front()) + "." + nested(c.operands.front());
      case ConceptKind::Forall:
        return sym_.forall + roleText(c.roles.front()) + "." + nested(c.operands.front());
      case ConceptKind::ExistsSelf: return sym_.exists + roleText(c.roles.front()) + ".Self";
      case ConceptKind::HasValue:
        return sym_.exists + roleText(c.roles.front()) + "." + nominal(c.names);
      case ConceptKind::AtMost:
      case ConceptKind::AtLeast: {
        std::string out = c.kind == ConceptKind::AtMost ? sym_.atMost : sym_.atLeast;
        out += std::to_string(c.count) + " " + roleText(c.roles.front());
        if (!c.operands.empty()) out += "." + nested(c.operands.front());
        return out;
      }
    }
    return "?";
  }

  std::string roleText(const Role& r) const {
    switch (r.kind) {
      case RoleKind::Atomic: return term(r.names.front());
      case RoleKind::Universal: return "U";
      case RoleKind::Empty: return "N";
      case RoleKind::Inverse: return nestedRole(r.operands.front()) + sym_.inverse;
      case RoleKind::Not: return sym_.neg + nestedRole(r.operands.front());
      case RoleKind::And:
        return nestedRole(r.operands[0]) + sym_.conj + nestedRole(r.operands[1]);
      case RoleKind::Or:
        return nestedRole(r.operands[0]) + sym_.disj + nestedRole(r.operands[1]);
      case RoleKind::Chain: {
        std::string out;
        for (const auto& op : r.operands) {
          if (!out.empty()) out += sym_.compose;
          out += nestedRole(op);
        }
        return out;
      }
      case RoleKind::TransClosure: return nestedRole(r.operands.front()) + sym_.plus;
      case RoleKind::ReflTransClosure: return nestedRole(r.operands.front()) + "*";
      case RoleKind::Restrict: {
        std::string out = nestedRole(r.operands.front()) + "[";
        if (!r.left.empty()) out += conceptText(r.left.front());
        out += "|";
        if (!r.right.empty()) out += conceptText(r.right.front());
        return out + "]";
      }
      case RoleKind::Id: return "id(" + conceptText(r.right.front()) + ")";
      case RoleKind::Sym: return "sym(" + roleText(r.operands.front()) + ")";
    }
    return "?";
  }

  std::string axiom(const Axiom& a) const {
    switch (a.kind) {
      case AxiomKind::ConceptEquiv: return conceptText(a.concepts[0]) + sym_.equiv + conceptText(a.concepts[1]);
      case AxiomKind::ConceptSub: return conceptText(a.concepts[0]) + sym_.sub + conceptText(a.concepts[1]);
      case AxiomKind::RoleEquiv: return roleText(a.roles[0]) + sym_.equiv + roleText(a.roles[1]);
      case AxiomKind::RoleSub:
      case AxiomKind::ChainSub: return roleText(a.roles[0]) + sym_.sub + roleText(a.roles[1]);
      case AxiomKind::ConceptAssert:
        return applied(a.concepts[0]) + "(" + term(a.individuals[0]) + ")";
      case AxiomKind::NegConceptAssert:
        return sym_.neg + applied(a.concepts[0]) + "(" + term(a.individuals[0]) + ")";
      case AxiomKind::RoleAssert:
        return nestedRole(a.roles[0]) + "(" + term(a.individuals[0]) + ", " +
               term(a.individuals[1]) + ")";
      case AxiomKind::NegRoleAssert:
        return sym_.neg + nestedRole(a.roles[0]) + "(" + term(a.individuals[0]) + ", " +
               term(a.individuals[1]) + ")";
      case AxiomKind::SameIndividual:
        return "{" + term(a.individuals[0]) + "}" + sym_.equiv + "{" + term(a.individuals[1]) + "}";
      case AxiomKind::DifferentIndividuals:
        return "{" + term(a.individuals[0]) + "}" + sym_.sub + sym_.neg + "{" +
               term(a.individuals[1]) + "}";
      case AxiomKind::RoleProperty: {
        std::string out = std::string(characteristicName(a.characteristic)) + "(";
        for (std::size_t i = 0; i < a.roles.size(); ++i) {
          if (i) out += ", ";
          out += roleText(a.roles[i]);
        }
        return out + ")";
      }
    }
    return "?";
  }

 private:
  std::string iri(const std::string& text) const {
    if (options_.prefixes) {
      if (auto short_ = options_.prefixes->shorten(text)) {
        if (short_->first.empty()) return short_->second;
        return short_->first + ":" + short_->second;
      }
    }
    return "<" + text + ">";
  }

  std::string nominal(const std::vector<rdf::Term>& names) const {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ", ";
      out += term(names[i]);
    }
    return out + "}";
  }

  // Binary constructors are parenthesized wherever they appear as operands.
  std::string nested(const Concept& c) const {
    if (c.kind == ConceptKind::And || c.kind == ConceptKind::Or) return "(" + conceptText(c) + ")";
    return conceptText(c);
  }

  // A concept applied to an individual needs parentheses unless it is a name.
  std::string applied(const Concept& c) const {
    if (c.kind == ConceptKind::Atomic || c.kind == ConceptKind::Top ||
        c.kind == ConceptKind::Bottom) {
      return conceptText(c);
    }
    return "(" + conceptText(c) + ")";
  }

  std::string nestedRole(const Role& r) const {
    switch (r.kind) {
      case RoleKind::And:
      case RoleKind::Or:
      case RoleKind::Chain:
      case RoleKind::Not:
        return "(" + roleText(r) + ")";
      default:
        return roleText(r);
    }
  }

  const RenderOptions& options_;
  const Symbols& sym_;
};

}  // namespace

std::string render(const Concept& c, const RenderOptions& options) {
  return Renderer(options).conceptText(c);
}
std::string render(const Role& r, const RenderOptions& options) { return Renderer(options).roleText(r); }
std::string render(const Axiom& a, const RenderOptions& options) {
  return Renderer(options).axiom(a);
}
std::string renderTerm(const rdf::Term& t, const RenderOptions& options) {
  return Renderer(options).term(t);
}

}  // namespace opa::dl
