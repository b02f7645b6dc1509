#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pgb/error.hpp"
#include "pgb/polynomial.hpp"

namespace pgb {

// Token stream shared by the polynomial grammar, the ideal file format
// and the geometry DSL. Punctuation tokens are single characters except
// "==", which is lexed as one token.
struct Token {
  enum class Kind { Ident, Integer, Punct, End };
  Kind kind;
  std::string text;
  std::size_t line, column;
};

class Tokenizer {
 public:
  explicit Tokenizer(const std::string& text);

  const Token& peek() const { return toks_[pos_]; }
  const Token& next();
  bool accept_punct(const std::string& p);
  void expect_punct(const std::string& p);
  std::string expect_ident(const std::string& what);
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Resolves an identifier occurring in an expression to a polynomial.
using SymbolResolver = std::function<Polynomial(const std::string& name, const Token& at)>;

// Parses one expression from the stream:
//   expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
//   factor := atom ('^' nonneg-integer)? ; atom := identifier | rational | '(' expr ')'
// Juxtaposition is not multiplication; '/' appears only inside rational literals.
Polynomial parse_expression(Tokenizer& toks, const RingPtr& ring, const SymbolResolver& resolve);

// Parses a complete polynomial over the ring's symbols.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace pgb
