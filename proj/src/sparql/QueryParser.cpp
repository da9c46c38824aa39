#include "opa/sparql/QueryParser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "opa/io/Iri.h"
#include "opa/io/PrefixMap.h"
#include "opa/io/detail/Cursor.h"
#include "opa/rdf/Vocabulary.h"

namespace opa::sparql {

using io::ParseError;
using rdf::Term;

namespace {

enum class Tok { End, Iri, PName, Var, String, Number, Word, LangTag, DtMark, Punct };

struct Token {
  Tok kind = Tok::End;
  std::string text;   // IRI, var name, lexical form, word, punctuation
  std::string local;  // PName local part; Number datatype
  std::size_t line = 1;
  std::size_t column = 1;
};

bool isWordChar(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) || c == '_' || c == '-';
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : cur_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = std::move(tok_);
    advance();
    return t;
  }

 private:
  void advance() {
    cur_.skipSpace(true);
    tok_ = Token{};
    tok_.line = cur_.line();
    tok_.column = cur_.column();
    if (cur_.atEnd()) return;
    char c = cur_.peek();

    if (c == '<' && looksLikeIri()) {
      tok_.kind = Tok::Iri;
      tok_.text = cur_.readIriRef();
      return;
    }
    if (c == '?' || c == '$') {
      cur_.advance();
      tok_.kind = Tok::Var;
      while (!cur_.atEnd() && isWordChar(cur_.peek()) && cur_.peek() != '-') {
        tok_.text += cur_.advance();
      }
      if (tok_.text.empty()) cur_.fail("empty variable name");
      return;
    }
    if (c == '"' || c == '\'') {
      tok_.kind = Tok::String;
      tok_.text = cur_.readQuoted();
      return;
    }
    if (c == '@') {
      cur_.advance();
      tok_.kind = Tok::LangTag;
      tok_.text = cur_.readLangTag();
      return;
    }
    if (cur_.consume("^^")) {
      tok_.kind = Tok::DtMark;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-' || c == '.') && std::isdigit(static_cast<unsigned char>(cur_.peek(1))))) {
      lexNumber();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_') {
      lexWordOrName();
      return;
    }
    for (std::string_view op : {"<=", ">=", "!=", "&&", "||"}) {
      if (cur_.consume(op)) {
        tok_.kind = Tok::Punct;
        tok_.text = std::string(op);
        return;
      }
    }
    if (std::string_view("{}().;,*<>=!").find(c) != std::string_view::npos) {
      tok_.kind = Tok::Punct;
      tok_.text = std::string(1, cur_.advance());
      return;
    }
    cur_.fail("unexpected character '" + std::string(1, c) + "'");
  }

  // An IRIREF runs to '>' without whitespace or other forbidden characters;
  // otherwise '<' is the less-than operator.
  bool looksLikeIri() const {
    auto rest = cur_.rest();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      char c = rest[i];
      if (c == '>') return true;
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        return false;
      }
    }
    return false;
  }

  void lexNumber() {
    tok_.kind = Tok::Number;
    std::string& text = tok_.text;
    if (cur_.peek() == '+' || cur_.peek() == '-') text += cur_.advance();
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(cur_.peek())) && !cur_.atEnd()) {
        text += cur_.advance();
      }
    };
    digits();
    tok_.local = vocab::kXsdInteger;
    if (cur_.peek() == '.' && std::isdigit(static_cast<unsigned char>(cur_.peek(1)))) {
      text += cur_.advance();
      digits();
      tok_.local = vocab::kXsdDecimal;
    }
    if (cur_.peek() == 'e' || cur_.peek() == 'E') {
      text += cur_.advance();
      if (cur_.peek() == '+' || cur_.peek() == '-') text += cur_.advance();
      digits();
      tok_.local = vocab::kXsdDouble;
    }
  }

  void lexWordOrName() {
    std::string word;
    while (!cur_.atEnd() && (isWordChar(cur_.peek()) || cur_.peek() == '.')) {
      if (cur_.peek() == '.' && !isWordChar(cur_.peek(1))) break;
      word += cur_.advance();
    }
    if (word == "_" && cur_.peek() == ':') {
      tok_.kind = Tok::Word;
      tok_.text = "_:";
      cur_.advance();
      return;
    }
    if (cur_.peek() != ':') {
      tok_.kind = Tok::Word;
      tok_.text = std::move(word);
      return;
    }
    cur_.advance();
    tok_.kind = Tok::PName;
    tok_.text = std::move(word);
    while (!cur_.atEnd()) {
      char c = cur_.peek();
      if (isWordChar(c) || c == ':' || c == '%') {
        tok_.local += cur_.advance();
      } else if (c == '.' && isWordChar(cur_.peek(1))) {
        tok_.local += cur_.advance();
      } else if (c == '\\' && !cur_.atEnd()) {
        cur_.advance();
        tok_.local += cur_.advance();
      } else {
        break;
      }
    }
  }

  io::detail::Cursor cur_;
  Token tok_;
};

// One element of a group graph pattern, before translation.
struct GroupElement {
  enum Kind { Pattern, Minus } kind;
  AlgebraPtr algebra;
};

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : lex_(text) {}

  AlgebraPtr run() {
    prologue();
    const Token& form = lex_.peek();
    std::string keyword = form.kind == Tok::Word ? upper(form.text) : "";
    if (keyword == "ASK" || keyword == "DESCRIBE" || keyword == "CONSTRUCT") unsupported(form);
    if (keyword != "SELECT") fail(form, "expected SELECT");
    lex_.take();

    const Token& proj = lex_.peek();
    if (proj.kind == Tok::Word) {
      auto w = upper(proj.text);
      if (w == "DISTINCT" || w == "REDUCED") unsupported(proj);
    }
    if (proj.kind == Tok::Var || (proj.kind == Tok::Punct && proj.text == "(")) {
      fail(proj, "unsupported SPARQL feature 'projection'; only SELECT * is supported");
    }
    expectPunct("*", "after SELECT");

    if (isWord("FROM")) unsupported(lex_.peek());
    if (isWord("WHERE")) lex_.take();
    AlgebraPtr where = group();

    std::optional<std::size_t> limit;
    while (lex_.peek().kind != Tok::End) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Word && upper(t.text) == "LIMIT") {
        if (limit) fail(t, "duplicate LIMIT");
        lex_.take();
        Token n = lex_.take();
        std::size_t value = 0;
        auto res = std::from_chars(n.text.data(), n.text.data() + n.text.size(), value);
        if (n.kind != Tok::Number || n.local != vocab::kXsdInteger ||
            res.ptr != n.text.data() + n.text.size() || n.text[0] == '+' || n.text[0] == '-') {
          fail(n, "LIMIT expects a non-negative integer");
        }
        limit = value;
        continue;
      }
      if (t.kind == Tok::Word) {
        auto w = upper(t.text);
        if (w == "OFFSET" || w == "ORDER" || w == "GROUP" || w == "HAVING" || w == "VALUES") {
          unsupported(t);
        }
      }
      fail(t, "unexpected token after query body");
    }
    if (limit) where = makeLimit(*limit, std::move(where));
    return makeSelectAll(std::move(where));
  }

 private:
  [[noreturn]] void fail(const Token& t, std::string message) {
    throw ParseError({t.line, t.column, std::move(message)});
  }
  [[noreturn]] void unsupported(const Token& t) {
    fail(t, "unsupported SPARQL feature '" + upper(t.text) + "'");
  }

  bool isWord(std::string_view w) const {
    return lex_.peek().kind == Tok::Word && upper(lex_.peek().text) == w;
  }
  bool isPunct(std::string_view p) const {
    return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
  }
  void expectPunct(std::string_view p, std::string_view context) {
    if (!isPunct(p)) {
      fail(lex_.peek(), "expected '" + std::string(p) + "' " + std::string(context) + describe());
    }
    lex_.take();
  }
  std::string describe() const {
    const Token& t = lex_.peek();
    if (t.kind == Tok::End) return ", found end of query";
    return ", found '" + t.text + "'";
  }

  void prologue() {
    while (true) {
      if (isWord("PREFIX")) {
        lex_.take();
        Token name = lex_.take();
        if (name.kind != Tok::PName || !name.local.empty()) {
          fail(name, "expected a prefix name ending in ':'");
        }
        Token iri = lex_.take();
        if (iri.kind != Tok::Iri) fail(iri, "expected an IRI for PREFIX " + name.text + ":");
        prefixes_.bind(name.text, resolve(iri));
      } else if (isWord("BASE")) {
        lex_.take();
        Token iri = lex_.take();
        if (iri.kind != Tok::Iri) fail(iri, "expected an IRI after BASE");
        prefixes_.setBase(resolve(iri));
      } else {
        return;
      }
    }
  }

  std::string resolve(const Token& iri) {
    if (io::isAbsoluteIri(iri.text)) return iri.text;
    if (!prefixes_.base()) fail(iri, "relative IRI <" + iri.text + "> with no BASE");
    auto r = io::resolveIri(iri.text, *prefixes_.base());
    if (!r) fail(iri, "unsupported relative IRI reference <" + iri.text + ">");
    return *r;
  }

  AlgebraPtr group() {
    expectPunct("{", "to open a group");
    std::vector<GroupElement> elements;
    std::vector<FilterExpr> filters;
    std::vector<QueryPattern> block;
    auto flush = [&] {
      if (!block.empty()) elements.push_back({GroupElement::Pattern, makeBgp(std::move(block))});
      block.clear();
    };

    while (!isPunct("}")) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::End) fail(t, "unterminated group, expected '}'");
      if (isPunct("{")) {
        flush();
        AlgebraPtr g = group();
        while (isWord("UNION")) {
          lex_.take();
          g = makeUnion(std::move(g), group());
        }
        elements.push_back({GroupElement::Pattern, std::move(g)});
      } else if (isWord("MINUS")) {
        flush();
        lex_.take();
        elements.push_back({GroupElement::Minus, group()});
      } else if (isWord("FILTER")) {
        flush();
        lex_.take();
        filters.push_back(filter());
      } else if (t.kind == Tok::Word && isUnsupportedGroupKeyword(upper(t.text))) {
        unsupported(t);
      } else if (isPunct(".")) {
        lex_.take();
      } else {
        triplesSameSubject(block);
        if (!isPunct(".") && !isPunct("}") && startsTerm()) {
          fail(lex_.peek(), "expected '.' between triple patterns" + describe());
        }
      }
    }
    lex_.take();
    flush();

    AlgebraPtr result;
    for (auto& e : elements) {
      if (e.kind == GroupElement::Minus) {
        result = makeMinus(result ? std::move(result) : makeBgp({}), std::move(e.algebra));
      } else {
        result = result ? makeJoin(std::move(result), std::move(e.algebra)) : std::move(e.algebra);
      }
    }
    if (!result) result = makeBgp({});
    for (auto& f : filters) result = makeFilter(std::move(f), std::move(result));
    return result;
  }

  static bool isUnsupportedGroupKeyword(const std::string& w) {
    static const char* const kWords[] = {"OPTIONAL", "GRAPH", "SERVICE", "BIND", "VALUES",
                                         "SELECT", "EXISTS", "NOT"};
    return std::any_of(std::begin(kWords), std::end(kWords), [&](const char* k) { return w == k; });
  }

  bool startsTerm() const {
    const Token& t = lex_.peek();
    return t.kind == Tok::Var || t.kind == Tok::Iri || t.kind == Tok::PName ||
           t.kind == Tok::String || t.kind == Tok::Number ||
           (t.kind == Tok::Word && (t.text == "a" || t.text == "true" || t.text == "false"));
  }

  FilterExpr filter() {
    const Token& open = lex_.peek();
    if (!isPunct("(")) {
      if (open.kind == Tok::Word) {
        fail(open, "unsupported FILTER function '" + open.text + "'");
      }
      fail(open, "expected '(' after FILTER" + describe());
    }
    lex_.take();
    FilterExpr expr;
    expr.lhs = operand();
    Token op = lex_.take();
    if (op.kind != Tok::Punct) fail(op, "expected a comparison operator in FILTER");
    if (op.text == "<") expr.op = CompareOp::Less;
    else if (op.text == "<=") expr.op = CompareOp::LessEq;
    else if (op.text == ">") expr.op = CompareOp::Greater;
    else if (op.text == ">=") expr.op = CompareOp::GreaterEq;
    else if (op.text == "=") expr.op = CompareOp::Equal;
    else if (op.text == "!=") expr.op = CompareOp::NotEqual;
    else if (op.text == "&&" || op.text == "||") {
      fail(op, "unsupported SPARQL feature 'compound FILTER expression'");
    } else {
      fail(op, "expected a comparison operator in FILTER, found '" + op.text + "'");
    }
    expr.rhs = operand();
    if (isPunct("&&") || isPunct("||")) {
      fail(lex_.peek(), "unsupported SPARQL feature 'compound FILTER expression'");
    }
    expectPunct(")", "to close FILTER");
    return expr;
  }

  FilterOperand operand() {
    Token t = lex_.take();
    if (t.kind == Tok::Var) return Variable{t.text};
    if (t.kind == Tok::Number) {
      double value = 0;
      const char* begin = t.text.data() + (t.text[0] == '+' ? 1 : 0);
      auto res = std::from_chars(begin, t.text.data() + t.text.size(), value);
      if (res.ec != std::errc{}) fail(t, "malformed number in FILTER");
      return value;
    }
    if (t.kind == Tok::Word || t.kind == Tok::PName || t.kind == Tok::Iri) {
      fail(t, "unsupported FILTER operand '" + t.text + "'; only variables and numbers are supported");
    }
    fail(t, "expected a variable or number in FILTER");
  }

  void triplesSameSubject(std::vector<QueryPattern>& out) {
    PatternSlot subject = term(Position::Subject);
    while (true) {
      PatternSlot predicate = term(Position::Predicate);
      while (true) {
        PatternSlot object = term(Position::Object);
        out.push_back({subject, predicate, std::move(object)});
        if (!isPunct(",")) break;
        lex_.take();
      }
      if (!isPunct(";")) return;
      while (isPunct(";")) lex_.take();
      if (isPunct(".") || isPunct("}")) return;
    }
  }

  enum class Position { Subject, Predicate, Object };

  PatternSlot term(Position pos) {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Var:
        return Variable{t.text};
      case Tok::Iri:
        return Term::iri(resolve(t));
      case Tok::PName: {
        auto ns = prefixes_.lookup(t.text);
        if (!ns) fail(t, "undeclared prefix '" + t.text + ":'");
        return Term::iri(*ns + t.local);
      }
      case Tok::Word:
        if (t.text == "a" && pos == Position::Predicate) return Term::iri(vocab::kType);
        if ((t.text == "true" || t.text == "false") && pos == Position::Object) {
          return Term::literal(t.text, vocab::kXsdBoolean);
        }
        if (t.text == "_:") fail(t, "unsupported SPARQL feature 'blank nodes in patterns'");
        if (isUnsupportedGroupKeyword(upper(t.text))) unsupported(t);
        fail(t, "unexpected '" + t.text + "' in triple pattern");
      case Tok::String:
      case Tok::Number:
        if (pos != Position::Object) fail(t, "a literal can only appear in object position");
        return literal(std::move(t));
      case Tok::Punct:
        if (t.text == "[" || t.text == "(") {
          fail(t, "unsupported SPARQL feature 'blank nodes in patterns'");
        }
        if (t.text == "}" || t.text == ".") fail(t, "incomplete triple pattern");
        fail(t, "unexpected '" + t.text + "' in triple pattern");
      default:
        fail(t, "incomplete triple pattern");
    }
  }

  Term literal(Token t) {
    if (t.kind == Tok::Number) return Term::literal(std::move(t.text), t.local);
    if (lex_.peek().kind == Tok::LangTag) return Term::langLiteral(std::move(t.text), lex_.take().text);
    if (lex_.peek().kind == Tok::DtMark) {
      lex_.take();
      Token dt = lex_.take();
      if (dt.kind == Tok::Iri) return Term::literal(std::move(t.text), resolve(dt));
      if (dt.kind == Tok::PName) {
        auto ns = prefixes_.lookup(dt.text);
        if (!ns) fail(dt, "undeclared prefix '" + dt.text + ":'");
        return Term::literal(std::move(t.text), *ns + dt.local);
      }
      fail(dt, "expected a datatype IRI after '^^'");
    }
    return Term::literal(std::move(t.text));
  }

  Lexer lex_;
  io::PrefixMap prefixes_;
};

}  // namespace

AlgebraPtr parseQuery(std::string_view text) { return QueryParser(text).run(); }

}  // namespace opa::sparql
