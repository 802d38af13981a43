#pragma once

#include <string_view>

#include "tokfuzz/errors.hpp"
#include "tokfuzz/token.hpp"

namespace tokfuzz {

// Total variant: tokens lexed up to the first offending character, if any.
struct LexOutcome {
  TokenSeq tokens;
  bool ok = true;
  size_t error_pos = 0;
  std::string error_msg;
};

LexOutcome lex_total(std::string_view source);

// Strict variant for seed ingestion: throws LexError instead of recovering.
TokenSeq lex(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace tokfuzz
