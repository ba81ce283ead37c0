#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rxnkit/core/types.hpp"

namespace rxnkit::grammar {

enum class TokenKind {
  RxnSt,
  RxnEd,
  RctSt,
  RctEd,
  CndSt,
  CndEd,
  PrdSt,
  PrdEd,
  ClassStr,
  ClassTxt,
  Integer,  // coordinate or id, decided by the parser from position
  Role,
  Text,     // single-quoted literal, quotes stripped
  Comma,
  LBracket,
  RBracket,
  UnknownSpecial,  // bracketed word such as [Foo]
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::size_t offset = 0;
  std::size_t length = 0;
  std::int64_t value = 0;  // Integer; saturates at kIntegerCap
  ConditionRole role = ConditionRole::Agt;
  std::string text;  // Text payload or UnknownSpecial spelling
};

inline constexpr std::int64_t kIntegerCap = 1'000'000'000'000LL;

using TokenSequence = std::vector<Token>;

// On-demand lexer; whitespace between tokens is skipped. Throws ParseError
// (UnknownToken, UnterminatedQuote) positioned at the offending byte.
class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token next();
  Token peek();

  // Offset of the next non-whitespace byte.
  std::size_t position();
  // Next non-whitespace byte, or '\0' at end.
  char peek_char();

 private:
  void skip_space();
  Token lex();

  std::string_view input_;
  std::size_t pos_ = 0;
  bool has_peeked_ = false;
  Token peeked_;
};

// Whole-input tokenization, ending with an End token.
TokenSequence tokenize(std::string_view input);

}  // namespace rxnkit::grammar
