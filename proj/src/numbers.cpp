#include "tokfuzz/numbers.hpp"

#include <algorithm>
#include <set>

namespace tokfuzz {

const std::vector<uint64_t>& canonical_pool() {
  static const std::vector<uint64_t> pool = [] {
    std::set<uint64_t> s;
    for (int k = 0; k <= 32; k++) {
      uint64_t p = uint64_t{1} << k;
      s.insert(p);
      s.insert(p - 1);
      s.insert(p + 1);
    }
    return std::vector<uint64_t>(s.begin(), s.end());
  }();
  return pool;
}

uint64_t nearest_canonical(uint64_t n) {
  const auto& pool = canonical_pool();
  if (n >= pool.back()) return pool.back();
  auto it = std::lower_bound(pool.begin(), pool.end(), n);
  if (*it == n) return n;
  // it > begin here: pool starts at 0.
  uint64_t hi = *it;
  uint64_t lo = *(it - 1);
  // Tie goes to the smaller member.
  return (hi - n < n - lo) ? hi : lo;
}

uint64_t number_text_value(const std::string& text) {
  uint64_t v = 0;
  for (char c : text) {
    if (c == '.') break;
    if (c < '0' || c > '9') break;
    uint64_t d = static_cast<uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10) return UINT64_MAX;
    v = v * 10 + d;
  }
  return v;
}

}  // namespace tokfuzz
