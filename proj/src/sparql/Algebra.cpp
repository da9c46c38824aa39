#include "opa/sparql/Algebra.h"

#include <algorithm>
#include <sstream>

namespace opa::sparql {

namespace {
template <typename T>
AlgebraPtr wrap(T node) {
  return std::make_shared<const Algebra>(Algebra{std::move(node)});
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

AlgebraPtr makeBgp(std::vector<QueryPattern> patterns) { return wrap(Bgp{std::move(patterns)}); }
AlgebraPtr makeJoin(AlgebraPtr l, AlgebraPtr r) { return wrap(Join{std::move(l), std::move(r)}); }
AlgebraPtr makeUnion(AlgebraPtr l, AlgebraPtr r) { return wrap(Union{std::move(l), std::move(r)}); }
AlgebraPtr makeMinus(AlgebraPtr l, AlgebraPtr r) { return wrap(Minus{std::move(l), std::move(r)}); }
AlgebraPtr makeFilter(FilterExpr e, AlgebraPtr inner) {
  return wrap(Filter{std::move(e), std::move(inner)});
}
AlgebraPtr makeLimit(std::size_t n, AlgebraPtr inner) { return wrap(Limit{n, std::move(inner)}); }
AlgebraPtr makeSelectAll(AlgebraPtr inner) { return wrap(SelectAll{std::move(inner)}); }

std::vector<AlgebraPtr> unionArms(const AlgebraPtr& node) {
  if (const auto* u = std::get_if<Union>(&node->node)) {
    auto arms = unionArms(u->left);
    auto right = unionArms(u->right);
    arms.insert(arms.end(), right.begin(), right.end());
    return arms;
  }
  return {node};
}

std::vector<Variable> variablesOf(const Algebra& root) {
  std::vector<Variable> out;
  auto note = [&](const Variable& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  auto noteSlot = [&](const auto& slot) {
    if (const auto* v = std::get_if<Variable>(&slot)) note(*v);
  };
  auto visit = [&](auto&& self, const Algebra& a) -> void {
    std::visit(Overloaded{
                   [&](const Bgp& b) {
                     for (const auto& p : b.patterns) {
                       noteSlot(p.subject);
                       noteSlot(p.predicate);
                       noteSlot(p.object);
                     }
                   },
                   [&](const Join& j) {
                     self(self, *j.left);
                     self(self, *j.right);
                   },
                   [&](const Union& u) {
                     self(self, *u.left);
                     self(self, *u.right);
                   },
                   [&](const Minus& m) {
                     self(self, *m.left);
                     self(self, *m.right);
                   },
                   [&](const Filter& f) {
                     self(self, *f.inner);
                     noteSlot(f.expr.lhs);
                     noteSlot(f.expr.rhs);
                   },
                   [&](const Limit& l) { self(self, *l.inner); },
                   [&](const SelectAll& s) { self(self, *s.inner); },
               },
               a.node);
  };
  visit(visit, root);
  return out;
}

namespace {

std::string slotText(const PatternSlot& slot) {
  if (const auto* v = std::get_if<Variable>(&slot)) return "?" + v->name;
  return std::get<rdf::Term>(slot).toNTriples();
}

std::string operandText(const FilterOperand& op) {
  if (const auto* v = std::get_if<Variable>(&op)) return "?" + v->name;
  std::ostringstream os;
  os << std::get<double>(op);
  return os.str();
}

const char* opText(CompareOp op) {
  switch (op) {
    case CompareOp::Less: return "<";
    case CompareOp::LessEq: return "<=";
    case CompareOp::Greater: return ">";
    case CompareOp::GreaterEq: return ">=";
    case CompareOp::Equal: return "=";
    case CompareOp::NotEqual: return "!=";
  }
  return "?";
}

}  // namespace

std::string toSExpression(const Algebra& a) {
  return std::visit(
      Overloaded{
          [](const Bgp& b) {
            std::string out = "(bgp";
            for (const auto& p : b.patterns) {
              out += " (" + slotText(p.subject) + " " + slotText(p.predicate) + " " +
                     slotText(p.object) + ")";
            }
            return out + ")";
          },
          [](const Join& j) {
            return "(join " + toSExpression(*j.left) + " " + toSExpression(*j.right) + ")";
          },
          [](const Union& u) {
            return "(union " + toSExpression(*u.left) + " " + toSExpression(*u.right) + ")";
          },
          [](const Minus& m) {
            return "(minus " + toSExpression(*m.left) + " " + toSExpression(*m.right) + ")";
          },
          [](const Filter& f) {
            return std::string("(filter (") + opText(f.expr.op) + " " + operandText(f.expr.lhs) +
                   " " + operandText(f.expr.rhs) + ") " + toSExpression(*f.inner) + ")";
          },
          [](const Limit& l) {
            return "(limit " + std::to_string(l.count) + " " + toSExpression(*l.inner) + ")";
          },
          [](const SelectAll& s) { return "(select * " + toSExpression(*s.inner) + ")"; },
      },
      a.node);
}

}  // namespace opa::sparql
