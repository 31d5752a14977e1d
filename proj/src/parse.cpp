#include "fpl/parse.hpp"

#include <cctype>
#include <vector>

namespace fpl {
namespace {

enum class Tok { Letter, Bot, Top, Tilde, Amp, Pipe, Arrow, LParen, RParen, LBrace, RBrace, Comma, Implies, End };

struct Token {
  Tok kind;
  unsigned index = 0;  // Letter
  size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t pos = i;
    switch (c) {
      case '~': out.push_back({Tok::Tilde, 0, pos}); ++i; continue;
      case '&': out.push_back({Tok::Amp, 0, pos}); ++i; continue;
      case '|': out.push_back({Tok::Pipe, 0, pos}); ++i; continue;
      case '(': out.push_back({Tok::LParen, 0, pos}); ++i; continue;
      case ')': out.push_back({Tok::RParen, 0, pos}); ++i; continue;
      case '{': out.push_back({Tok::LBrace, 0, pos}); ++i; continue;
      case '}': out.push_back({Tok::RBrace, 0, pos}); ++i; continue;
      case ',': out.push_back({Tok::Comma, 0, pos}); ++i; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, 0, pos});
          i += 2;
          continue;
        }
        throw ParseError("expected '->'", pos);
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Implies, 0, pos});
          i += 2;
          continue;
        }
        throw ParseError("expected '=>'", pos);
      default: break;
    }
    if (c == 'p' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      unsigned idx = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        idx = idx * 10 + static_cast<unsigned>(text[i++] - '0');
      out.push_back({Tok::Letter, idx, pos});
      continue;
    }
    if (text.compare(i, 3, "bot") == 0) {
      out.push_back({Tok::Bot, 0, pos});
      i += 3;
      continue;
    }
    if (text.compare(i, 3, "top") == 0) {
      out.push_back({Tok::Top, 0, pos});
      i += 3;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back({Tok::End, 0, text.size()});
  return out;
}

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Formula formula() {
    Formula f = imp();
    expect(Tok::End, "end of input");
    return f;
  }

  IFormula iformula() {
    FormulaSet a = brace_set();
    expect(Tok::Implies, "'=>'");
    FormulaSet s = brace_set();
    expect(Tok::End, "end of input");
    if (a.empty() || s.empty()) throw ParseError("i-formula sides must be non-empty", peek().pos);
    return IFormula(std::move(a), std::move(s));
  }

private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++i_;
  }

  FormulaSet brace_set() {
    expect(Tok::LBrace, "'{'");
    FormulaSet out;
    out.insert(imp());
    while (peek().kind == Tok::Comma) {
      ++i_;
      out.insert(imp());
    }
    expect(Tok::RBrace, "'}'");
    return out;
  }

  Formula imp() {
    Formula a = junct();
    if (peek().kind == Tok::Arrow) {
      ++i_;
      return Formula::imp(a, imp());  // right-associative
    }
    return a;
  }

  // & and | share a precedence level; unparenthesized mixtures are rejected.
  Formula junct() {
    Formula a = unary();
    if (peek().kind == Tok::Amp) {
      while (peek().kind == Tok::Amp) {
        ++i_;
        a = Formula::conj(a, unary());
      }
      if (peek().kind == Tok::Pipe)
        throw ParseError("parentheses required between '&' and '|'", peek().pos);
    } else if (peek().kind == Tok::Pipe) {
      while (peek().kind == Tok::Pipe) {
        ++i_;
        a = Formula::disj(a, unary());
      }
      if (peek().kind == Tok::Amp)
        throw ParseError("parentheses required between '&' and '|'", peek().pos);
    }
    return a;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        ++i_;
        return Formula::neg(unary());
      case Tok::LParen: {
        ++i_;
        Formula f = imp();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Bot:
        ++i_;
        return Formula::bot();
      case Tok::Top:
        ++i_;
        return Formula::top();
      case Tok::Letter: {
        Token t = next();
        return Formula::letter(t.index);
      }
      default:
        throw ParseError("expected a formula", peek().pos);
    }
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

bool prints_as_atom(const Formula& f) {
  if (f.is_top()) return true;
  if (f.is_neg()) return prints_as_atom(f.lhs());
  return f.is(Formula::Kind::Bot) || f.is(Formula::Kind::Letter);
}

void print_rec(const Formula& f, std::string& out);

void print_child(const Formula& f, bool need_parens, std::string& out) {
  if (need_parens) {
    out += '(';
    print_rec(f, out);
    out += ')';
  } else {
    print_rec(f, out);
  }
}

bool is_bare_binary(const Formula& f) {
  // Binary connectives that print infix (sugar forms print as atoms/prefix).
  if (prints_as_atom(f)) return false;
  return f.is(Formula::Kind::And) || f.is(Formula::Kind::Or) || f.is(Formula::Kind::Imp);
}

void print_rec(const Formula& f, std::string& out) {
  if (f.is_top()) {
    out += "top";
    return;
  }
  if (f.is_neg()) {
    out += '~';
    print_child(f.lhs(), !prints_as_atom(f.lhs()), out);
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Bot:
      out += "bot";
      return;
    case Formula::Kind::Letter:
      out += 'p' + std::to_string(f.index());
      return;
    case Formula::Kind::And:
      // left-associative chain; any other binary child needs parentheses
      print_child(f.lhs(), is_bare_binary(f.lhs()) && !f.lhs().is(Formula::Kind::And), out);
      out += " & ";
      print_child(f.rhs(), is_bare_binary(f.rhs()), out);
      return;
    case Formula::Kind::Or:
      print_child(f.lhs(), is_bare_binary(f.lhs()) && !f.lhs().is(Formula::Kind::Or), out);
      out += " | ";
      print_child(f.rhs(), is_bare_binary(f.rhs()), out);
      return;
    case Formula::Kind::Imp:
      // right-associative: only an implication on the left needs parentheses
      print_child(f.lhs(), is_bare_binary(f.lhs()) && f.lhs().is(Formula::Kind::Imp), out);
      out += " -> ";
      print_child(f.rhs(), false, out);
      return;
  }
}

}  // namespace

Formula parse(const std::string& text) { return Parser(text).formula(); }

IFormula parse_iformula(const std::string& text) { return Parser(text).iformula(); }

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

std::string print(const IFormula& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& g : f.ante()) {
    if (!first) out += ", ";
    first = false;
    out += print(g);
  }
  out += "} => {";
  first = true;
  for (const auto& g : f.succ()) {
    if (!first) out += ", ";
    first = false;
    out += print(g);
  }
  out += '}';
  return out;
}

}  // namespace fpl
