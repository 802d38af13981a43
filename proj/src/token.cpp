#include "tokfuzz/token.hpp"

namespace tokfuzz {

const char* kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::punctuator: return "punct";
    case TokenKind::identifier: return "ident";
    case TokenKind::number_literal: return "number";
    case TokenKind::string_literal: return "string";
  }
  return "?";
}

bool kind_from_name(const std::string& name, TokenKind& out) {
  if (name == "keyword") out = TokenKind::keyword;
  else if (name == "punct") out = TokenKind::punctuator;
  else if (name == "ident") out = TokenKind::identifier;
  else if (name == "number") out = TokenKind::number_literal;
  else if (name == "string") out = TokenKind::string_literal;
  else return false;
  return true;
}

bool is_glue_text(const std::string& text) {
  return text == "'" || text == "\"";
}

Token make_token(TokenKind kind, std::string text) {
  Spacing sp = is_glue_text(text) ? Spacing::glue : Spacing::normal;
  return Token{kind, std::move(text), sp};
}

std::string render(const TokenSeq& toks) {
  std::string out;
  for (size_t i = 0; i < toks.size(); i++) {
    if (i > 0 && toks[i - 1].spacing != Spacing::glue &&
        toks[i].spacing != Spacing::glue) {
      out += ' ';
    }
    out += toks[i].text;
  }
  return out;
}

}  // namespace tokfuzz
