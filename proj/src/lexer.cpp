#include "tokfuzz/lexer.hpp"

#include <array>
#include <cctype>

namespace tokfuzz {

namespace {

constexpr std::array<std::string_view, 16> kKeywords = {
    "let",   "const", "var",  "function", "return", "if",    "else",  "while",
    "for",   "true",  "false", "null",    "new",    "class", "delete", "typeof",
};

constexpr std::array<std::string_view, 10> kPunct2or3 = {
    "===", "==", "=>", "<=", ">=", "!=", "++", "--", "&&", "||",
};

constexpr std::string_view kPunct1 = "(){}[];,.=+-*/%<>!?:";

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_part(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

}  // namespace

bool is_keyword(std::string_view word) {
  for (std::string_view kw : kKeywords)
    if (kw == word) return true;
  return false;
}

LexOutcome lex_total(std::string_view src) {
  LexOutcome out;
  size_t i = 0;
  const size_t n = src.size();
  auto fail = [&](size_t pos, const char* msg) {
    out.ok = false;
    out.error_pos = pos;
    out.error_msg = msg;
  };

  while (i < n) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
        c == '\f') {
      i++;
      continue;
    }
    // Comments are whitespace to the token stream.
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') i++;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      size_t start = i;
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) i++;
      if (i + 1 >= n) {
        fail(start, "unterminated comment");
        return out;
      }
      i += 2;
      continue;
    }
    if (ident_start(c)) {
      size_t start = i;
      while (i < n && ident_part(src[i])) i++;
      std::string word(src.substr(start, i - start));
      TokenKind k =
          is_keyword(word) ? TokenKind::keyword : TokenKind::identifier;
      out.tokens.push_back(make_token(k, std::move(word)));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) i++;
      // Fraction only when a digit follows the dot (maximal munch).
      if (i + 1 < n && src[i] == '.' &&
          std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        i++;
        while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) i++;
      }
      out.tokens.push_back(make_token(TokenKind::number_literal,
                                      std::string(src.substr(start, i - start))));
      continue;
    }
    if (c == '\'' || c == '"') {
      size_t start = i;
      char quote = c;
      i++;
      while (i < n && src[i] != quote) {
        if (src[i] == '\n') {
          fail(start, "unterminated string");
          return out;
        }
        if (src[i] == '\\' && i + 1 < n) i++;
        i++;
      }
      if (i >= n) {
        fail(start, "unterminated string");
        return out;
      }
      i++;  // closing quote
      out.tokens.push_back(make_token(TokenKind::string_literal,
                                      std::string(src.substr(start, i - start))));
      continue;
    }
    // Punctuators, longest match first.
    bool matched = false;
    for (std::string_view p : kPunct2or3) {
      if (src.substr(i, p.size()) == p) {
        out.tokens.push_back(make_token(TokenKind::punctuator, std::string(p)));
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kPunct1.find(c) != std::string_view::npos) {
      out.tokens.push_back(make_token(TokenKind::punctuator, std::string(1, c)));
      i++;
      continue;
    }
    fail(i, "illegal character");
    return out;
  }
  return out;
}

TokenSeq lex(std::string_view src) {
  LexOutcome out = lex_total(src);
  if (!out.ok) throw LexError(out.error_pos, out.error_msg);
  return std::move(out.tokens);
}

}  // namespace tokfuzz
