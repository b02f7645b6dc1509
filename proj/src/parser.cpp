#include "pgb/parser.hpp"

#include <cctype>

namespace pgb {

Tokenizer::Tokenizer(const std::string& text) {
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    std::size_t tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      toks_.push_back({Token::Kind::Ident, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      toks_.push_back({Token::Kind::Integer, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
      toks_.push_back({Token::Kind::Punct, "==", tl, tc});
      advance(2);
      continue;
    }
    static const std::string punct = "+-*^()/,;=[]";
    if (punct.find(c) != std::string::npos) {
      toks_.push_back({Token::Kind::Punct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw parse_error(tl, tc, std::string("unexpected character '") + c + "'");
  }
  toks_.push_back({Token::Kind::End, "", line, col});
}

const Token& Tokenizer::next() {
  const Token& t = toks_[pos_];
  if (t.kind != Token::Kind::End) ++pos_;
  return t;
}

bool Tokenizer::accept_punct(const std::string& p) {
  if (peek().kind == Token::Kind::Punct && peek().text == p) {
    next();
    return true;
  }
  return false;
}

void Tokenizer::expect_punct(const std::string& p) {
  if (!accept_punct(p)) fail("expected '" + p + "'");
}

std::string Tokenizer::expect_ident(const std::string& what) {
  if (peek().kind != Token::Kind::Ident) fail("expected " + what);
  return next().text;
}

void Tokenizer::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  throw parse_error(t.line, t.column, msg + ", got " + got);
}

namespace {

Rat parse_rational(Tokenizer& toks) {
  const Token& n = toks.next();
  Int num(n.text, 10);
  if (toks.peek().kind == Token::Kind::Punct && toks.peek().text == "/") {
    toks.next();
    if (toks.peek().kind != Token::Kind::Integer) toks.fail("expected positive denominator");
    const Token& d = toks.next();
    Int den(d.text, 10);
    if (den == 0) throw parse_error(d.line, d.column, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  return Rat(num);
}

Polynomial parse_factor(Tokenizer& toks, const RingPtr& ring, const SymbolResolver& resolve);

Polynomial parse_term(Tokenizer& toks, const RingPtr& ring, const SymbolResolver& resolve) {
  Polynomial p = parse_factor(toks, ring, resolve);
  while (toks.peek().kind == Token::Kind::Punct && toks.peek().text == "*") {
    toks.next();
    p = p * parse_factor(toks, ring, resolve);
  }
  return p;
}

Polynomial parse_expr(Tokenizer& toks, const RingPtr& ring, const SymbolResolver& resolve) {
  bool neg = toks.accept_punct("-");
  Polynomial p = parse_term(toks, ring, resolve);
  if (neg) p = -p;
  while (toks.peek().kind == Token::Kind::Punct &&
         (toks.peek().text == "+" || toks.peek().text == "-")) {
    bool minus = toks.next().text == "-";
    Polynomial q = parse_term(toks, ring, resolve);
    p = minus ? p - q : p + q;
  }
  return p;
}

Polynomial parse_factor(Tokenizer& toks, const RingPtr& ring, const SymbolResolver& resolve) {
  Polynomial base(ring);
  const Token& t = toks.peek();
  if (t.kind == Token::Kind::Ident) {
    const Token at = toks.next();
    base = resolve(at.text, at);
  } else if (t.kind == Token::Kind::Integer) {
    base = Polynomial::constant(ring, parse_rational(toks));
  } else if (t.kind == Token::Kind::Punct && t.text == "(") {
    toks.next();
    base = parse_expr(toks, ring, resolve);
    toks.expect_punct(")");
  } else {
    toks.fail("expected identifier, number or '('");
  }
  if (toks.peek().kind == Token::Kind::Punct && toks.peek().text == "^") {
    toks.next();
    if (toks.peek().kind != Token::Kind::Integer) toks.fail("expected exponent");
    const Token& e = toks.next();
    unsigned long exp = std::stoul(e.text);
    Polynomial r = Polynomial::constant(ring, Rat(1));
    for (unsigned long k = 0; k < exp; ++k) r = r * base;
    return r;
  }
  return base;
}

}  // namespace

Polynomial parse_expression(Tokenizer& toks, const RingPtr& ring, const SymbolResolver& resolve) {
  return parse_expr(toks, ring, resolve);
}

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Tokenizer toks(text);
  auto resolve = [&](const std::string& name, const Token& at) {
    auto idx = ring->index_of(name);
    if (!idx) throw parse_error(at.line, at.column, "undeclared symbol '" + name + "'");
    return Polynomial::symbol(ring, name);
  };
  Polynomial p = parse_expression(toks, ring, resolve);
  if (toks.peek().kind != Token::Kind::End) toks.fail("trailing input after polynomial");
  return p;
}

}  // namespace pgb
