#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tokfuzz {

enum class TokenKind : uint8_t {
  keyword,
  punctuator,
  identifier,
  number_literal,
  string_literal,
};

// glue tokens render with no space on either side.
enum class Spacing : uint8_t { normal, glue };

struct Token {
  TokenKind kind;
  std::string text;  // never empty, never contains a raw newline
  Spacing spacing;

  bool operator==(const Token& o) const {
    return kind == o.kind && text == o.text && spacing == o.spacing;
  }
};

using TokenSeq = std::vector<Token>;

const char* kind_name(TokenKind k);
bool kind_from_name(const std::string& name, TokenKind& out);

// Default glue class: bare single- or double-quote tokens.
bool is_glue_text(const std::string& text);

// Builds a token with spacing derived from the default glue class.
Token make_token(TokenKind kind, std::string text);

// One space between consecutive tokens; none adjacent to a glue token.
std::string render(const TokenSeq& toks);

}  // namespace tokfuzz
