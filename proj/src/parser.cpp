#include <cctype>

#include "hyperltl/formula.hpp"

namespace hyperltl {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

enum class Tok {
  Ident,
  Not,
  Or,
  And,
  Implies,
  Iff,
  LParen,
  RParen,
  LAngle,
  RAngle,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", i});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, "->", i});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '!':
        k = Tok::Not;
        break;
      case '|':
        k = Tok::Or;
        break;
      case '&':
        k = Tok::And;
        break;
      case '(':
        k = Tok::LParen;
        break;
      case ')':
        k = Tok::RParen;
        break;
      case '<':
        k = Tok::LAngle;
        break;
      case '>':
        k = Tok::RAngle;
        break;
      case ',':
        k = Tok::Comma;
        break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_quantifier_word(const std::string& w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (c != 'A' && c != 'E') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  QuantifiedFormula run() {
    std::string quants;
    while (peek().kind == Tok::Ident && is_quantifier_word(peek().text) && toks_[pos_ + 1].kind != Tok::End) {
      quants += advance().text;
    }
    prefix_ = QuantifierPrefix::parse(quants);
    Formula body = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return {prefix_, body};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool is_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) {
      throw ParseError(peek().pos,
                       std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    }
    ++pos_;
  }

  Formula expr() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      ++pos_;
      return implies(lhs, expr());
    }
    if (peek().kind == Tok::Iff) {
      ++pos_;
      return iff(lhs, expr());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = lor(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = temporal();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = land(lhs, temporal());
    }
    return lhs;
  }

  Formula temporal() {
    Formula lhs = unary();
    if (is_keyword("U")) {
      ++pos_;
      return until(lhs, temporal());
    }
    if (is_keyword("R")) {
      ++pos_;
      return release(lhs, temporal());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      ++pos_;
      return lnot(unary());
    }
    if (is_keyword("X")) {
      ++pos_;
      return next(unary());
    }
    if (is_keyword("F")) {
      ++pos_;
      return eventually(unary());
    }
    if (is_keyword("G")) {
      ++pos_;
      return always(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++pos_;
        Formula f = expr();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::LAngle: {
        const std::size_t open = t.pos;
        ++pos_;
        std::vector<Formula> slots{expr()};
        while (peek().kind == Tok::Comma) {
          ++pos_;
          slots.push_back(expr());
        }
        expect(Tok::RAngle, "'>' or ','");
        if (!prefix_.empty() && slots.size() != prefix_.size()) {
          throw ParseError(open, "focus has " + std::to_string(slots.size()) + " slot(s) but the prefix quantifies " +
                                     std::to_string(prefix_.size()) + " path(s)");
        }
        return focus(std::move(slots));
      }
      case Tok::Ident: {
        if (t.text == "U" || t.text == "R") throw ParseError(t.pos, "binary operator '" + t.text + "' without left operand");
        ++pos_;
        if (t.text == "true") return top();
        if (t.text == "false") return bottom();
        if (is_reserved_name(t.text)) throw ParseError(t.pos, "names starting with '__' are reserved");
        if (!std::isalpha(static_cast<unsigned char>(t.text[0]))) throw ParseError(t.pos, "identifier must start with a letter");
        return prop(t.text);
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  QuantifierPrefix prefix_;
};

}  // namespace

QuantifiedFormula parse(std::string_view text) { return Parser(text).run(); }

}  // namespace hyperltl
