#include "opa/sparql/Evaluator.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <limits>
#include <span>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "opa/rdf/Vocabulary.h"

namespace opa::sparql {

using rdf::TermId;

bool compatible(const Solution& a, const Solution& b) {
  const Solution& small = a.size() <= b.size() ? a : b;
  const Solution& large = a.size() <= b.size() ? b : a;
  for (const auto& [var, term] : small) {
    auto it = large.find(var);
    if (it != large.end() && it->second != term) return false;
  }
  return true;
}

namespace {

bool allDigits(std::string_view s, bool allowSign) {
  if (allowSign && !s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool isDecimal(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return allDigits(s, false);
  auto whole = s.substr(0, dot);
  auto frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  return (whole.empty() || allDigits(whole, false)) && (frac.empty() || allDigits(frac, false));
}

std::optional<double> parseDouble(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  if (s == "INF") return std::numeric_limits<double>::infinity();
  if (s == "-INF") return -std::numeric_limits<double>::infinity();
  if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
  double value = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

constexpr std::string_view kIntegerTypes[] = {
    "integer",        "int",          "long",          "short",
    "byte",           "nonNegativeInteger", "positiveInteger", "nonPositiveInteger",
    "negativeInteger", "unsignedLong", "unsignedInt",   "unsignedShort",
    "unsignedByte"};

}  // namespace

std::optional<double> numericValue(const rdf::Term& term) {
  if (!term.isLiteral() || !term.language().empty()) return std::nullopt;
  const std::string& dt = term.datatype();
  const std::string& lex = term.value();
  if (dt == vocab::kXsdString) {
    if (!allDigits(lex, false)) return std::nullopt;
    return parseDouble(lex);
  }
  if (!dt.starts_with(vocab::kXsdNs)) return std::nullopt;
  std::string_view local = std::string_view(dt).substr(vocab::kXsdNs.size());
  if (std::find(std::begin(kIntegerTypes), std::end(kIntegerTypes), local) != std::end(kIntegerTypes)) {
    if (!allDigits(lex, true)) return std::nullopt;
    return parseDouble(lex);
  }
  if (local == "decimal") {
    if (!isDecimal(lex)) return std::nullopt;
    return parseDouble(lex);
  }
  if (local == "double" || local == "float") return parseDouble(lex);
  return std::nullopt;
}

namespace {

// Internal solution: one slot per query variable plus a bitmask of the
// bound ones.
struct Row {
  std::vector<TermId> values;
  std::uint64_t bound = 0;
};

using Rows = std::vector<Row>;
// Returns false to stop the producer.
using Sink = std::function<bool(const Row&)>;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct KeyHash {
  std::size_t operator()(const std::vector<TermId>& key) const noexcept {
    std::size_t h = key.size();
    for (TermId id : key) h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<TermId> project(const Row& row, std::uint64_t mask) {
  std::vector<TermId> key;
  key.reserve(std::popcount(mask));
  for (std::uint64_t m = mask; m; m &= m - 1) key.push_back(row.values[std::countr_zero(m)]);
  return key;
}

// Finds the rows of a fixed sequence that agree with a probe row on their
// shared variables. Rows are grouped by bound-variable mask; each group is
// hashed lazily on the variables it shares with the probe.
class CompatIndex {
 public:
  explicit CompatIndex(const Rows& rows) : rows_(rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) groups_[rows[i].bound].push_back(i);
  }

  /// Calls `fn(index)` for each compatible row whose shared domain with
  /// `probe` is non-empty (or any, when `requireShared` is false). `fn`
  /// returns false to stop.
  template <class Fn>
  bool forEach(const Row& probe, bool requireShared, Fn&& fn) {
    for (const auto& [mask, members] : groups_) {
      std::uint64_t shared = mask & probe.bound;
      if (shared == 0) {
        if (requireShared) continue;
        for (std::size_t i : members) {
          if (!fn(i)) return false;
        }
        continue;
      }
      auto& table = tables_[{mask, shared}];
      if (table.empty()) {
        for (std::size_t i : members) table[project(rows_[i], shared)].push_back(i);
      }
      auto it = table.find(project(probe, shared));
      if (it == table.end()) continue;
      for (std::size_t i : it->second) {
        if (!fn(i)) return false;
      }
    }
    return true;
  }

 private:
  const Rows& rows_;
  std::map<std::uint64_t, std::vector<std::size_t>> groups_;
  std::map<std::pair<std::uint64_t, std::uint64_t>,
           std::unordered_map<std::vector<TermId>, std::vector<std::size_t>, KeyHash>>
      tables_;
};

// A pattern slot after variable numbering: a variable index, a graph term
// id, or a constant absent from the graph.
struct Slot {
  enum Kind { Var, Const, Missing } kind;
  std::size_t index = 0;
};

struct CompiledPattern {
  Slot s, p, o;
};

class Evaluator {
 public:
  Evaluator(const rdf::Graph& graph, const Algebra& root, const EvalOptions& options)
      : graph_(graph), options_(options), vars_(variablesOf(root)) {
    if (vars_.size() > 64) {
      throw std::invalid_argument("query uses more than 64 variables");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i].name] = i;
  }

  SolutionSequence run(const Algebra& root) {
    SolutionSequence out;
    eval(root, [&](const Row& row) {
      Solution s;
      for (std::uint64_t m = row.bound; m; m &= m - 1) {
        auto i = static_cast<std::size_t>(std::countr_zero(m));
        s.emplace(vars_[i], graph_.term(row.values[i]));
      }
      out.push_back(std::move(s));
      return true;
    });
    return out;
  }

 private:
  void tick() {
    if (options_.deadline && (++ticks_ & 0x3FF) == 0) options_.deadline->check();
  }

  std::span<const rdf::IdTriple> scan(const rdf::IdPattern& p) {
    if (options_.stats) ++options_.stats->probes;
    return graph_.scan(p);
  }

  Rows materialize(const Algebra& a) {
    Rows rows;
    eval(a, [&](const Row& r) {
      rows.push_back(r);
      return true;
    });
    return rows;
  }

  Row emptyRow() const { return Row{std::vector<TermId>(vars_.size(), 0), 0}; }

  bool eval(const Algebra& a, const Sink& sink) {
    return std::visit(
        Overloaded{
            [&](const Bgp& b) { return evalBgp(b, sink); },
            [&](const Join& j) { return evalJoin(j, sink); },
            [&](const Union& u) { return eval(*u.left, sink) && eval(*u.right, sink); },
            [&](const Minus& m) { return evalMinus(m, sink); },
            [&](const Filter& f) {
              return eval(*f.inner, [&](const Row& r) { return !test(f.expr, r) || sink(r); });
            },
            [&](const Limit& l) {
              if (l.count == 0) return true;
              std::size_t seen = 0;
              bool more = true;
              eval(*l.inner, [&](const Row& r) {
                more = sink(r);
                return more && ++seen < l.count;
              });
              return more;
            },
            [&](const SelectAll& s) { return eval(*s.inner, sink); },
        },
        a.node);
  }

  Slot compile(const PatternSlot& slot) {
    if (const auto* v = std::get_if<Variable>(&slot)) return {Slot::Var, index_.at(v->name)};
    auto id = graph_.lookup(std::get<rdf::Term>(slot));
    if (!id) return {Slot::Missing};
    return {Slot::Const, *id};
  }

  bool evalBgp(const Bgp& bgp, const Sink& sink) {
    std::vector<CompiledPattern> patterns;
    for (const auto& p : bgp.patterns) {
      CompiledPattern c{compile(p.subject), compile(p.predicate), compile(p.object)};
      // A constant absent from the graph can never match.
      if (c.s.kind == Slot::Missing || c.p.kind == Slot::Missing || c.o.kind == Slot::Missing) {
        return true;
      }
      patterns.push_back(c);
    }
    order(patterns);
    Row row = emptyRow();
    return match(patterns, 0, row, sink);
  }

  rdf::IdPattern probeFor(const CompiledPattern& p, const Row* row) const {
    auto slot = [&](const Slot& s) -> std::optional<TermId> {
      if (s.kind == Slot::Const) return static_cast<TermId>(s.index);
      if (row && (row->bound >> s.index & 1)) return row->values[s.index];
      return std::nullopt;
    };
    return {slot(p.s), slot(p.p), slot(p.o)};
  }

  // Greedy selectivity ordering: repeatedly take the pattern with the most
  // slots already fixed (constants or variables bound by earlier picks),
  // breaking ties by the number of triples matching its constants.
  void order(std::vector<CompiledPattern>& patterns) {
    std::vector<std::size_t> estimate;
    for (const auto& p : patterns) estimate.push_back(scan(probeFor(p, nullptr)).size());
    std::vector<bool> used(patterns.size(), false);
    std::uint64_t bound = 0;
    std::vector<CompiledPattern> ordered;
    auto fixedCount = [&](const CompiledPattern& p) {
      int n = 0;
      for (const Slot* s : {&p.s, &p.p, &p.o}) {
        if (s->kind == Slot::Const || (bound >> s->index & 1)) ++n;
      }
      return n;
    };
    while (ordered.size() < patterns.size()) {
      std::size_t best = patterns.size();
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (used[i]) continue;
        if (best == patterns.size() || fixedCount(patterns[i]) > fixedCount(patterns[best]) ||
            (fixedCount(patterns[i]) == fixedCount(patterns[best]) && estimate[i] < estimate[best])) {
          best = i;
        }
      }
      used[best] = true;
      const auto& p = patterns[best];
      for (const Slot* s : {&p.s, &p.p, &p.o}) {
        if (s->kind == Slot::Var) bound |= std::uint64_t{1} << s->index;
      }
      ordered.push_back(p);
    }
    patterns = std::move(ordered);
  }

  bool match(const std::vector<CompiledPattern>& patterns, std::size_t depth, Row& row,
             const Sink& sink) {
    if (depth == patterns.size()) return sink(row);
    const auto& p = patterns[depth];
    for (const auto& t : scan(probeFor(p, &row))) {
      tick();
      Row saved = row;
      bool ok = bind(p.s, t.s, row) && bind(p.p, t.p, row) && bind(p.o, t.o, row);
      if (ok && !match(patterns, depth + 1, row, sink)) return false;
      row = std::move(saved);
    }
    return true;
  }

  // Binds a variable slot, or checks consistency when the same variable
  // occurs twice in one pattern.
  static bool bind(const Slot& s, TermId value, Row& row) {
    if (s.kind != Slot::Var) return true;
    std::uint64_t bit = std::uint64_t{1} << s.index;
    if (row.bound & bit) return row.values[s.index] == value;
    row.values[s.index] = value;
    row.bound |= bit;
    return true;
  }

  bool evalJoin(const Join& j, const Sink& sink) {
    Rows left = materialize(*j.left);
    if (left.empty()) return true;
    Rows right = materialize(*j.right);
    CompatIndex index(right);
    for (const Row& l : left) {
      bool more = index.forEach(l, false, [&](std::size_t i) {
        tick();
        const Row& r = right[i];
        Row merged = l;
        for (std::uint64_t m = r.bound & ~l.bound; m; m &= m - 1) {
          auto v = static_cast<std::size_t>(std::countr_zero(m));
          merged.values[v] = r.values[v];
        }
        merged.bound |= r.bound;
        return sink(merged);
      });
      if (!more) return false;
    }
    return true;
  }

  bool evalMinus(const Minus& m, const Sink& sink) {
    Rows left = materialize(*m.left);
    if (left.empty()) return true;
    Rows right = materialize(*m.right);
    CompatIndex index(right);
    for (const Row& l : left) {
      tick();
      bool removed = !index.forEach(l, true, [](std::size_t) { return false; });
      if (!removed && !sink(l)) return false;
    }
    return true;
  }

  std::optional<double> operand(const FilterOperand& op, const Row& row) const {
    if (const auto* d = std::get_if<double>(&op)) return *d;
    std::size_t i = index_.at(std::get<Variable>(op).name);
    if (!(row.bound >> i & 1)) return std::nullopt;
    return numericValue(graph_.term(row.values[i]));
  }

  // Errors (unbound or non-numeric operands) evaluate to false.
  bool test(const FilterExpr& e, const Row& row) const {
    auto a = operand(e.lhs, row);
    auto b = operand(e.rhs, row);
    if (!a || !b) return false;
    switch (e.op) {
      case CompareOp::Less: return *a < *b;
      case CompareOp::LessEq: return *a <= *b;
      case CompareOp::Greater: return *a > *b;
      case CompareOp::GreaterEq: return *a >= *b;
      case CompareOp::Equal: return *a == *b;
      case CompareOp::NotEqual: return *a != *b;
    }
    return false;
  }

  const rdf::Graph& graph_;
  const EvalOptions& options_;
  std::vector<Variable> vars_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t ticks_ = 0;
};

}  // namespace

SolutionSequence evaluate(const rdf::Graph& graph, const Algebra& algebra,
                          const EvalOptions& options) {
  return Evaluator(graph, algebra, options).run(algebra);
}

}  // namespace opa::sparql
