#include "rxnkit/grammar/lexer.hpp"

#include <array>
#include <utility>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::grammar {

namespace {

struct Special {
  std::string_view spelling;
  TokenKind kind;
  ConditionRole role;
};

constexpr std::array<Special, 15> kSpecials = {{
    {"[Rxn/st]", TokenKind::RxnSt, ConditionRole::Agt},
    {"[Rxn/ed]", TokenKind::RxnEd, ConditionRole::Agt},
    {"[Rct/st]", TokenKind::RctSt, ConditionRole::Agt},
    {"[Rct/ed]", TokenKind::RctEd, ConditionRole::Agt},
    {"[Cnd/st]", TokenKind::CndSt, ConditionRole::Agt},
    {"[Cnd/ed]", TokenKind::CndEd, ConditionRole::Agt},
    {"[Prd/st]", TokenKind::PrdSt, ConditionRole::Agt},
    {"[Prd/ed]", TokenKind::PrdEd, ConditionRole::Agt},
    {"[Str]", TokenKind::ClassStr, ConditionRole::Agt},
    {"[Txt]", TokenKind::ClassTxt, ConditionRole::Agt},
    {"[Agt]", TokenKind::Role, ConditionRole::Agt},
    {"[Svt]", TokenKind::Role, ConditionRole::Svt},
    {"[Tem]", TokenKind::Role, ConditionRole::Tem},
    {"[Time]", TokenKind::Role, ConditionRole::Time},
    {"[Yld]", TokenKind::Role, ConditionRole::Yld},
}};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string describe_byte(char c) {
  auto b = static_cast<unsigned char>(c);
  if (b >= 0x20 && b < 0x7f) return std::string("'") + c + "'";
  const char* hex = "0123456789abcdef";
  return std::string("byte 0x") + hex[b >> 4] + hex[b & 15];
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::RxnSt: return "[Rxn/st]";
    case TokenKind::RxnEd: return "[Rxn/ed]";
    case TokenKind::RctSt: return "[Rct/st]";
    case TokenKind::RctEd: return "[Rct/ed]";
    case TokenKind::CndSt: return "[Cnd/st]";
    case TokenKind::CndEd: return "[Cnd/ed]";
    case TokenKind::PrdSt: return "[Prd/st]";
    case TokenKind::PrdEd: return "[Prd/ed]";
    case TokenKind::ClassStr: return "[Str]";
    case TokenKind::ClassTxt: return "[Txt]";
    case TokenKind::Integer: return "integer";
    case TokenKind::Role: return "role token";
    case TokenKind::Text: return "text literal";
    case TokenKind::Comma: return "','";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::UnknownSpecial: return "unknown special token";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

void Lexer::skip_space() {
  while (pos_ < input_.size() && is_space(input_[pos_])) ++pos_;
}

std::size_t Lexer::position() {
  if (has_peeked_) return peeked_.offset;
  skip_space();
  return pos_;
}

char Lexer::peek_char() {
  std::size_t p = position();
  return p < input_.size() ? input_[p] : '\0';
}

Token Lexer::peek() {
  if (!has_peeked_) {
    peeked_ = lex();
    has_peeked_ = true;
  }
  return peeked_;
}

Token Lexer::next() {
  if (has_peeked_) {
    has_peeked_ = false;
    return std::move(peeked_);
  }
  return lex();
}

Token Lexer::lex() {
  skip_space();
  Token t;
  t.offset = pos_;
  if (pos_ >= input_.size()) {
    t.kind = TokenKind::End;
    return t;
  }
  std::string_view rest = input_.substr(pos_);
  char c = rest.front();

  if (c == '[') {
    for (const Special& s : kSpecials) {
      if (rest.starts_with(s.spelling)) {
        t.kind = s.kind;
        t.role = s.role;
        t.length = s.spelling.size();
        pos_ += t.length;
        return t;
      }
    }
    // [Word] or [Word/xx] that is not part of the inventory.
    std::size_t i = 1;
    while (i < rest.size() && (is_alpha(rest[i]) || is_digit(rest[i]) || rest[i] == '/')) ++i;
    if (i > 1 && is_alpha(rest[1]) && i < rest.size() && rest[i] == ']') {
      t.kind = TokenKind::UnknownSpecial;
      t.length = i + 1;
      t.text = std::string(rest.substr(0, t.length));
      pos_ += t.length;
      return t;
    }
    t.kind = TokenKind::LBracket;
    t.length = 1;
    ++pos_;
    return t;
  }
  if (c == ']' || c == ',') {
    t.kind = c == ']' ? TokenKind::RBracket : TokenKind::Comma;
    t.length = 1;
    ++pos_;
    return t;
  }
  if (is_digit(c)) {
    std::size_t i = 0;
    std::int64_t v = 0;
    while (i < rest.size() && is_digit(rest[i])) {
      if (v < kIntegerCap) v = v * 10 + (rest[i] - '0');
      ++i;
    }
    t.kind = TokenKind::Integer;
    t.value = v < kIntegerCap ? v : kIntegerCap;
    t.length = i;
    pos_ += i;
    return t;
  }
  if (c == '\'') {
    std::size_t close = rest.find('\'', 1);
    if (close == std::string_view::npos) {
      throw ParseError(ParseErrorKind::UnterminatedQuote, pos_, "text literal has no closing quote");
    }
    t.kind = TokenKind::Text;
    t.text = std::string(rest.substr(1, close - 1));
    t.length = close + 1;
    pos_ += t.length;
    return t;
  }
  throw ParseError(ParseErrorKind::UnknownToken, pos_, "unexpected " + describe_byte(c));
}

TokenSequence tokenize(std::string_view input) {
  Lexer lexer(input);
  TokenSequence out;
  for (;;) {
    Token t = lexer.next();
    bool end = t.kind == TokenKind::End;
    out.push_back(std::move(t));
    if (end) break;
  }
  return out;
}

}  // namespace rxnkit::grammar
