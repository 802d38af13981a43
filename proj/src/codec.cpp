#include "tokfuzz/codec.hpp"

namespace tokfuzz {

EncodedInput encode(const TokenSeq& toks, const TokenMap& map) {
  EncodedInput out;
  out.reserve(toks.size());
  for (const Token& t : toks) {
    auto code = map.code_of(t);
    if (!code) throw UnknownToken("token not in map: " + t.text);
    out.push_back(*code);
  }
  return out;
}

TokenSeq decode_tokens(const EncodedInput& codes, const TokenMap& map) {
  TokenSeq out;
  out.reserve(codes.size());
  for (uint16_t c : codes)
    out.push_back(map.token_at(normalize_code(c, map.size())));
  return out;
}

std::string decode(const EncodedInput& codes, const TokenMap& map) {
  return render(decode_tokens(codes, map));
}

}  // namespace tokfuzz
