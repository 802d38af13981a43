#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tokfuzz {

// Powers of two up to 2^32, each plus/minus one, deduplicated and sorted.
// Spans 0 .. 2^32+1.
const std::vector<uint64_t>& canonical_pool();

// Closest pool member; ties resolve to the smaller member.
uint64_t nearest_canonical(uint64_t n);

// Integer part of a number literal's text, saturating on overflow.
uint64_t number_text_value(const std::string& text);

}  // namespace tokfuzz
