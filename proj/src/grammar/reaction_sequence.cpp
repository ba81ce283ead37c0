#include "rxnkit/grammar/reaction_sequence.hpp"

#include <cstdio>
#include <unordered_map>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/validate.hpp"
#include "rxnkit/grammar/lexer.hpp"

namespace rxnkit::grammar {

namespace {

void append_object(std::string& out, const DetectedObject& o) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%03d,%03d,%03d,%03d,%s,%d]", o.bbox.x_min, o.bbox.y_min,
                o.bbox.x_max, o.bbox.y_max, o.cls == ObjectClass::Str ? "[Str]" : "[Txt]", o.id);
  out += buf;
}

bool is_marker(TokenKind k) {
  switch (k) {
    case TokenKind::RxnSt:
    case TokenKind::RxnEd:
    case TokenKind::RctSt:
    case TokenKind::RctEd:
    case TokenKind::CndSt:
    case TokenKind::CndEd:
    case TokenKind::PrdSt:
    case TokenKind::PrdEd:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view input) : lexer_(input) {}

  ParsedReactions run() {
    for (;;) {
      Token t = lexer_.peek();
      if (t.kind == TokenKind::End) break;
      if (t.kind == TokenKind::Comma && !result_.reactions.empty()) {
        lexer_.next();
        Token after = lexer_.peek();
        if (after.kind != TokenKind::RxnSt) {
          throw ParseError(ParseErrorKind::TrailingGarbage, t.offset,
                           "separator ',' is not followed by [Rxn/st]");
        }
        continue;
      }
      if (t.kind != TokenKind::RxnSt) {
        if (is_marker(t.kind)) {
          throw ParseError(ParseErrorKind::UnbalancedMarker, t.offset,
                           std::string(to_string(t.kind)) + " outside of a reaction");
        }
        throw ParseError(ParseErrorKind::TrailingGarbage, t.offset,
                         "expected [Rxn/st] or end of input, found " +
                             std::string(to_string(t.kind)));
      }
      result_.reactions.push_back(reaction());
    }
    return std::move(result_);
  }

 private:
  ReactionAnnotation reaction() {
    Token open = lexer_.next();  // [Rxn/st]
    ReactionAnnotation r;
    r.reactants = block(TokenKind::RctSt, TokenKind::RctEd, open, true);
    r.conditions = block(TokenKind::CndSt, TokenKind::CndEd, open, false);
    r.products = block(TokenKind::PrdSt, TokenKind::PrdEd, open, true);
    expect_closing(TokenKind::RxnEd, open);
    return r;
  }

  void expect_closing(TokenKind kind, const Token& opener) {
    Token t = lexer_.next();
    if (t.kind == kind) return;
    if (t.kind == TokenKind::End || is_marker(t.kind)) {
      throw ParseError(ParseErrorKind::UnbalancedMarker, t.offset,
                       "expected " + std::string(to_string(kind)) + " to close " +
                           std::string(to_string(opener.kind)) + " opened at byte " +
                           std::to_string(opener.offset) + ", found " +
                           std::string(to_string(t.kind)));
    }
    throw ParseError(ParseErrorKind::UnexpectedToken, t.offset,
                     "expected " + std::string(to_string(kind)) + ", found " +
                         std::string(to_string(t.kind)));
  }

  std::vector<int> block(TokenKind open_kind, TokenKind close_kind, const Token& rxn_open,
                         bool non_empty) {
    Token open = lexer_.next();
    if (open.kind != open_kind) {
      auto kind = (open.kind == TokenKind::End || is_marker(open.kind))
                      ? ParseErrorKind::UnbalancedMarker
                      : ParseErrorKind::UnexpectedToken;
      throw ParseError(kind, open.offset,
                       "expected " + std::string(to_string(open_kind)) + " inside reaction opened at byte " +
                           std::to_string(rxn_open.offset) + ", found " +
                           std::string(to_string(open.kind)));
    }
    std::vector<int> ids;
    for (;;) {
      Token t = lexer_.peek();
      if (t.kind == close_kind) {
        lexer_.next();
        if (non_empty && ids.empty()) {
          auto kind = open_kind == TokenKind::RctSt ? ParseErrorKind::EmptyReactants
                                                    : ParseErrorKind::EmptyProducts;
          throw ParseError(kind, t.offset,
                           std::string(open_kind == TokenKind::RctSt ? "reactant" : "product") +
                               " block must contain at least one object");
        }
        return ids;
      }
      if (t.kind == TokenKind::Comma && !ids.empty()) {
        lexer_.next();
        continue;
      }
      if (t.kind == TokenKind::LBracket) {
        ids.push_back(object());
        continue;
      }
      if (t.kind == TokenKind::End || is_marker(t.kind)) {
        throw ParseError(ParseErrorKind::UnbalancedMarker, t.offset,
                         "expected " + std::string(to_string(close_kind)) + " to close " +
                             std::string(to_string(open_kind)) + " opened at byte " +
                             std::to_string(open.offset) + ", found " +
                             std::string(to_string(t.kind)));
      }
      throw ParseError(ParseErrorKind::UnexpectedToken, t.offset,
                       "expected an object or " + std::string(to_string(close_kind)) +
                           ", found " + std::string(to_string(t.kind)));
    }
  }

  Token expect(TokenKind kind, const char* what) {
    Token t = lexer_.next();
    if (t.kind != kind) {
      auto pk = t.kind == TokenKind::End ? ParseErrorKind::UnexpectedEnd
                                         : ParseErrorKind::UnexpectedToken;
      throw ParseError(pk, t.offset,
                       std::string("expected ") + what + ", found " + std::string(to_string(t.kind)));
    }
    return t;
  }

  int coordinate() {
    Token t = expect(TokenKind::Integer, "a coordinate");
    if (t.value > kMaxBin) {
      throw ParseError(ParseErrorKind::CoordinateRange, t.offset,
                       "coordinate " + std::to_string(t.value) + " exceeds 999");
    }
    return static_cast<int>(t.value);
  }

  int object() {
    Token open = lexer_.next();  // '['
    DetectedObject o;
    o.bbox.x_min = coordinate();
    expect(TokenKind::Comma, "','");
    o.bbox.y_min = coordinate();
    expect(TokenKind::Comma, "','");
    o.bbox.x_max = coordinate();
    expect(TokenKind::Comma, "','");
    o.bbox.y_max = coordinate();
    expect(TokenKind::Comma, "','");
    Token cls = lexer_.next();
    if (cls.kind == TokenKind::ClassStr) {
      o.cls = ObjectClass::Str;
    } else if (cls.kind == TokenKind::ClassTxt) {
      o.cls = ObjectClass::Txt;
    } else {
      auto pk = cls.kind == TokenKind::End ? ParseErrorKind::UnexpectedEnd
                                           : ParseErrorKind::UnexpectedToken;
      throw ParseError(pk, cls.offset,
                       "expected [Str] or [Txt], found " + std::string(to_string(cls.kind)));
    }
    expect(TokenKind::Comma, "','");
    Token id = expect(TokenKind::Integer, "an object id");
    if (id.value > INT32_MAX) {
      throw ParseError(ParseErrorKind::UnexpectedToken, id.offset, "object id is too large");
    }
    o.id = static_cast<int>(id.value);
    expect(TokenKind::RBracket, "']'");

    if (o.bbox.x_min >= o.bbox.x_max || o.bbox.y_min >= o.bbox.y_max) {
      throw ParseError(ParseErrorKind::InvalidGeometry, open.offset,
                       "object " + std::to_string(o.id) + " needs x_min < x_max and y_min < y_max");
    }
    auto [it, inserted] = index_.emplace(o.id, result_.objects.size());
    if (inserted) {
      result_.objects.push_back(o);
    } else if (!(result_.objects[it->second] == o)) {
      throw ParseError(ParseErrorKind::ConflictingObject, open.offset,
                       "object id " + std::to_string(o.id) +
                           " reappears with a different box or class");
    }
    return o.id;
  }

  Lexer lexer_;
  ParsedReactions result_;
  std::unordered_map<int, std::size_t> index_;
};

}  // namespace

std::string emit_reaction_sequence(std::span<const DetectedObject> objects,
                                   std::span<const ReactionAnnotation> reactions) {
  auto violations = validate_reactions(objects, reactions);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::unordered_map<int, const DetectedObject*> by_id;
  for (const DetectedObject& o : objects) by_id.emplace(o.id, &o);

  std::string out;
  auto role = [&](const char* open, const std::vector<int>& ids, const char* close) {
    out += open;
    for (int id : ids) append_object(out, *by_id.at(id));
    out += close;
  };
  for (const ReactionAnnotation& r : reactions) {
    out += "[Rxn/st]";
    role("[Rct/st]", r.reactants, "[Rct/ed]");
    role("[Cnd/st]", r.conditions, "[Cnd/ed]");
    role("[Prd/st]", r.products, "[Prd/ed]");
    out += "[Rxn/ed]";
  }
  return out;
}

ParsedReactions parse_reaction_sequence(std::string_view input) { return Parser(input).run(); }

std::string canonicalize_reaction_sequence(std::string_view input) {
  ParsedReactions p = parse_reaction_sequence(input);
  return emit_reaction_sequence(p.objects, p.reactions);
}

}  // namespace rxnkit::grammar
