#pragma once

#include <cstdint>
#include <vector>

#include "tokfuzz/token_map.hpp"

namespace tokfuzz {

using EncodedInput = std::vector<uint16_t>;

// Throws UnknownToken on any token missing from the map.
EncodedInput encode(const TokenSeq& toks, const TokenMap& map);

// Out-of-range codes wrap onto valid entries.
inline uint16_t normalize_code(uint16_t code, size_t map_size) {
  return static_cast<uint16_t>(code % map_size);
}

// Total: every code array maps to a token sequence via normalization.
TokenSeq decode_tokens(const EncodedInput& codes, const TokenMap& map);

// render(decode_tokens(...)); never fails on a non-empty map.
std::string decode(const EncodedInput& codes, const TokenMap& map);

}  // namespace tokfuzz
