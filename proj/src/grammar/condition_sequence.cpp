#include "rxnkit/grammar/condition_sequence.hpp"

#include "rxnkit/core/errors.hpp"
#include "rxnkit/grammar/lexer.hpp"

namespace rxnkit::grammar {

std::string emit_condition_sequence(std::span<const ConditionWord> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const ConditionWord& w = words[i];
    if (!is_valid_word_text(w.text)) {
      throw Error(ErrorCode::InvalidArgument,
                  "condition word " + std::to_string(i) + " is empty or contains whitespace");
    }
    if (w.text.find('\'') != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument,
                  "condition word " + std::to_string(i) + " contains a single quote");
    }
    if (i) out += ',';
    out += '\'';
    out += w.text;
    out += "'[";
    out += to_string(w.role);
    out += ']';
  }
  return out;
}

std::vector<ConditionWord> parse_condition_sequence(std::string_view input) {
  Lexer lexer(input);
  std::vector<ConditionWord> words;
  if (lexer.peek().kind == TokenKind::End) return words;

  for (;;) {
    Token text = lexer.next();
    if (text.kind != TokenKind::Text) {
      auto kind = text.kind == TokenKind::End ? ParseErrorKind::UnexpectedEnd
                                              : ParseErrorKind::UnexpectedToken;
      throw ParseError(kind, text.offset,
                       "expected a quoted word, found " + std::string(to_string(text.kind)));
    }
    if (!is_valid_word_text(text.text)) {
      throw ParseError(ParseErrorKind::InvalidWord, text.offset,
                       "word must be non-empty and contain no whitespace");
    }

    // Check the raw byte first so an embedded quote is reported as such
    // instead of as an unknown character.
    std::size_t role_at = lexer.position();
    char c = lexer.peek_char();
    if (c != '[') {
      std::string hint = (c == '\0') ? "input ends" : "found another character";
      if (c != '\0' && c != ',') hint += " (single quotes inside text are not supported)";
      throw ParseError(ParseErrorKind::MissingRole, role_at,
                       "expected a role token after '" + text.text + "'; " + hint);
    }
    Token role = lexer.next();
    if (role.kind == TokenKind::UnknownSpecial) {
      throw ParseError(ParseErrorKind::UnknownRole, role.offset,
                       "unknown role token " + role.text);
    }
    if (role.kind != TokenKind::Role) {
      throw ParseError(ParseErrorKind::MissingRole, role.offset,
                       "expected [Agt], [Svt], [Tem], [Time] or [Yld], found " +
                           std::string(to_string(role.kind)));
    }
    words.push_back({std::move(text.text), role.role});

    Token sep = lexer.next();
    if (sep.kind == TokenKind::End) return words;
    if (sep.kind != TokenKind::Comma) {
      throw ParseError(ParseErrorKind::UnexpectedToken, sep.offset,
                       "expected ',' or end of input, found " + std::string(to_string(sep.kind)));
    }
  }
}

}  // namespace rxnkit::grammar
