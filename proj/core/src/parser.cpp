#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "clonesub/error.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub {

OperatorTable::OperatorTable() {
  for (const auto& op : builtinOperators()) ops_.emplace(op.name, op);
}

void OperatorTable::declare(const Operator& op) {
  const auto it = ops_.find(op.name);
  if (it != ops_.end()) {
    if (it->second.fun != op.fun) {
      throw Error("operator '" + op.name + "' is already declared with table " +
                  it->second.fun.toString());
    }
    return;
  }
  ops_.emplace(op.name, op);
}

const Operator* OperatorTable::find(std::string_view name) const {
  const auto it = ops_.find(name);
  return it == ops_.end() ? nullptr : &it->second;
}

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Amp, Bar, Bang, Caret, Le, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool isIdentByte(unsigned char ch) {
  return std::isalnum(ch) || ch == '_' || ch == '\'' || ch >= 0x80;
}

std::vector<Token> lex(std::string_view line, std::size_t lineNo, std::size_t colOffset) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    const auto ch = static_cast<unsigned char>(line[i]);
    const std::size_t col = colOffset + i + 1;
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (isIdentByte(ch)) {
      std::size_t j = i;
      while (j < line.size() && isIdentByte(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (line.substr(i, 2) == "<=") {
      toks.push_back({Tok::Le, "<=", col});
      i += 2;
      continue;
    }
    if (line.substr(i, 2) == "==") {
      toks.push_back({Tok::EqEq, "==", col});
      i += 2;
      continue;
    }
    Tok k;
    switch (ch) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Bar; break;
      case '!': k = Tok::Bang; break;
      case '^': k = Tok::Caret; break;
      default:
        throw ParseError(std::string("unexpected character '") + line[i] + "'", lineNo, col);
    }
    toks.push_back({k, std::string(1, line[i]), col});
    ++i;
  }
  toks.push_back({Tok::End, "", colOffset + line.size() + 1});
  return toks;
}

class ConceptParser {
 public:
  ConceptParser(std::vector<Token> toks, const OperatorTable& ops, std::size_t line)
      : toks_(std::move(toks)), ops_(ops), line_(line) {}

  Concept expression() { return orExpr(); }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " at end of line" : ", found '" + t.text + "'"),
                     line_, t.column);
  }

 private:
  Concept binary(Tok tok, const char* opName, Concept (ConceptParser::*sub)()) {
    Concept left = (this->*sub)();
    while (peek().kind == tok) {
      ++pos_;
      Concept right = (this->*sub)();
      left = Concept::op(*ops_.find(opName), {std::move(left), std::move(right)});
    }
    return left;
  }

  Concept orExpr() { return binary(Tok::Bar, "or", &ConceptParser::xorExpr); }
  Concept xorExpr() { return binary(Tok::Caret, "xor", &ConceptParser::andExpr); }
  Concept andExpr() { return binary(Tok::Amp, "and", &ConceptParser::unary); }

  Concept unary() {
    if (peek().kind == Tok::Bang) {
      ++pos_;
      return Concept::op(*ops_.find("not"), {unary()});
    }
    if (peek().kind == Tok::Ident && (peek().text == "exists" || peek().text == "forall")) {
      const bool ex = next().text == "exists";
      if (peek().kind != Tok::Ident || isKeyword(peek().text)) fail("expected a role name");
      std::string role = next().text;
      expect(Tok::Dot, "'.' after the role name");
      Concept body = unary();
      return ex ? Concept::exists(std::move(role), std::move(body))
                : Concept::forall(std::move(role), std::move(body));
    }
    return primary();
  }

  Concept primary() {
    if (peek().kind == Tok::LParen) {
      ++pos_;
      Concept c = expression();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (peek().kind != Tok::Ident) fail("expected a concept");
    const Token name = next();
    const Operator* op = ops_.find(name.text);
    if (peek().kind == Tok::LParen) {
      if (op == nullptr) {
        throw ParseError("unknown operator '" + name.text + "'", line_, name.column);
      }
      ++pos_;
      std::vector<Concept> args;
      if (peek().kind != Tok::RParen) {
        args.push_back(expression());
        while (peek().kind == Tok::Comma) {
          ++pos_;
          args.push_back(expression());
        }
      }
      expect(Tok::RParen, "')' closing the argument list");
      if (args.size() != op->arity()) {
        throw ParseError("operator '" + name.text + "' has arity " +
                             std::to_string(op->arity()) + " but is applied to " +
                             std::to_string(args.size()) + " arguments",
                         line_, name.column);
      }
      return Concept::op(*op, std::move(args));
    }
    if (op != nullptr) {
      if (op->arity() != 0) {
        throw ParseError("operator '" + name.text + "' has arity " + std::to_string(op->arity()) +
                             " and needs arguments",
                         line_, name.column);
      }
      return Concept::op(*op, {});
    }
    if (isKeyword(name.text)) {
      throw ParseError("keyword '" + name.text + "' cannot name an atom", line_, name.column);
    }
    return Concept::atom(name.text);
  }

  static bool isKeyword(const std::string& s) { return s == "exists" || s == "forall"; }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const OperatorTable& ops_;
  std::size_t line_;
};

std::pair<Concept, Concept> parsePair(std::string_view rest, std::size_t colOffset,
                                      std::size_t lineNo, const OperatorTable& ops, Tok sep,
                                      const char* sepText) {
  ConceptParser p(lex(rest, lineNo, colOffset), ops, lineNo);
  Concept lhs = p.expression();
  p.expect(sep, sepText);
  Concept rhs = p.expression();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  return {std::move(lhs), std::move(rhs)};
}

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> splitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    lines.push_back({number, line});
    ++number;
    start = end + 1;
  }
  return lines;
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t j0 = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > j0) out.emplace_back(std::string(s.substr(j0, i - j0)), j0 + 1);
  }
  return out;
}

}  // namespace

Concept parseConcept(std::string_view text, const OperatorTable& ops) {
  ConceptParser p(lex(text, 1, 0), ops, 1);
  Concept c = p.expression();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  return c;
}

Problem parseProblem(std::string_view text) {
  const auto lines = splitLines(text);
  OperatorTable ops;

  // Operator declarations are visible on every line, including earlier ones.
  for (const auto& line : lines) {
    const auto w = words(line.text);
    if (w.empty() || w[0].first != "op") continue;
    if (w.size() != 4) {
      throw ParseError("expected 'op <name> <arity> <truthtable>'", line.number, w[0].second);
    }
    const auto& name = w[1].first;
    if (name == "exists" || name == "forall" ||
        !std::all_of(name.begin(), name.end(),
                     [](char c) { return isIdentByte(static_cast<unsigned char>(c)); })) {
      throw ParseError("invalid operator name '" + name + "'", line.number, w[1].second);
    }
    unsigned arity = 0;
    try {
      std::size_t used = 0;
      const int a = std::stoi(w[2].first, &used);
      if (used != w[2].first.size() || a < 0) throw std::invalid_argument("arity");
      arity = static_cast<unsigned>(a);
    } catch (const std::exception&) {
      throw ParseError("invalid arity '" + w[2].first + "'", line.number, w[2].second);
    }
    BoolFun fun;
    try {
      fun = BoolFun::fromString(w[3].first);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number, w[3].second);
    }
    if (fun.arity() != arity) {
      throw ParseError("operator '" + name + "' declares arity " + std::to_string(arity) +
                           " but its table has " + std::to_string(fun.rows()) + " rows",
                       line.number, w[3].second);
    }
    try {
      ops.declare({name, fun});
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number, w[1].second);
    }
  }

  Problem p;
  bool haveQuery = false;
  for (const auto& line : lines) {
    std::size_t i = 0;
    while (i < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[i]))) ++i;
    if (i == line.text.size()) continue;
    std::size_t j = i;
    while (j < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[j]))) ++j;
    const std::string keyword(line.text.substr(i, j - i));
    const auto rest = line.text.substr(j);

    if (keyword == "op") continue;
    if (keyword == "axiom") {
      auto [l, r] = parsePair(rest, j, line.number, ops, Tok::Le, "'<='");
      p.tbox.push_back({std::move(l), std::move(r)});
    } else if (keyword == "equiv") {
      auto [l, r] = parsePair(rest, j, line.number, ops, Tok::EqEq, "'=='");
      p.tbox.push_back({l, r});
      p.tbox.push_back({std::move(r), std::move(l)});
    } else if (keyword == "query") {
      if (haveQuery) throw ParseError("duplicate query", line.number, i + 1);
      auto [l, r] = parsePair(rest, j, line.number, ops, Tok::Le, "'<='");
      p.lhs = std::move(l);
      p.rhs = std::move(r);
      haveQuery = true;
    } else if (keyword == "quantifiers") {
      const auto w = words(rest);
      if (w.size() != 1) {
        throw ParseError("expected 'quantifiers none|exists|forall|both|auto'", line.number,
                         i + 1);
      }
      if (w[0].first == "auto") {
        p.declaredQuantifiers.reset();
      } else if (auto q = quantifierSetFromString(w[0].first)) {
        p.declaredQuantifiers = q;
      } else {
        throw ParseError("unknown quantifier set '" + w[0].first + "'", line.number,
                         j + w[0].second);
      }
    } else {
      throw ParseError("unknown statement '" + keyword + "'", line.number, i + 1);
    }
  }
  if (!haveQuery) throw ParseError("problem has no query line");

  if (p.declaredQuantifiers) {
    Problem syntactic = p;
    syntactic.declaredQuantifiers.reset();
    if (!syntactic.signature().quantifiers.subsetOf(*p.declaredQuantifiers)) {
      throw ParseError("declared quantifiers '" + p.declaredQuantifiers->toString() +
                       "' omit quantifiers used in the problem");
    }
  }
  return p;
}

}  // namespace clonesub
