#include "tokfuzz/coverage.hpp"

#include <array>

namespace tokfuzz {

namespace {

std::array<uint8_t, 256> build_bucket_table() {
  std::array<uint8_t, 256> t{};
  t[0] = 0;
  t[1] = 1 << 0;
  t[2] = 1 << 1;
  t[3] = 1 << 2;
  for (int i = 4; i <= 7; i++) t[i] = 1 << 3;
  for (int i = 8; i <= 15; i++) t[i] = 1 << 4;
  for (int i = 16; i <= 31; i++) t[i] = 1 << 5;
  for (int i = 32; i <= 127; i++) t[i] = 1 << 6;
  for (int i = 128; i <= 255; i++) t[i] = 1 << 7;
  return t;
}

const std::array<uint8_t, 256> kBuckets = build_bucket_table();

}  // namespace

uint8_t bucketize(uint8_t count) { return kBuckets[count]; }

GlobalCoverage::GlobalCoverage(size_t size) : virgin_(size, 0) {}

Novelty GlobalCoverage::has_new_bits(std::span<const uint8_t> trace) {
  if (trace.size() != virgin_.size())
    throw SizeMismatch("trace size " + std::to_string(trace.size()) +
                       " != map size " + std::to_string(virgin_.size()));
  Novelty result = Novelty::nothing;
  const uint8_t* t = trace.data();
  uint8_t* v = virgin_.data();
  size_t n = virgin_.size();
  for (size_t i = 0; i < n; i++) {
    if (t[i] == 0) continue;
    uint8_t mask = kBuckets[t[i]];
    if (v[i] == 0) {
      result = Novelty::new_edge;
      edges_seen_++;
      v[i] = mask;
    } else if (mask & ~v[i]) {
      if (result == Novelty::nothing) result = Novelty::new_bucket;
      v[i] |= mask;
    }
  }
  return result;
}

uint64_t trace_signature(std::span<const uint8_t> trace) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < trace.size(); i++) {
    if (trace[i] == 0) continue;
    h ^= (static_cast<uint64_t>(i) << 8) | kBuckets[trace[i]];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<uint32_t> trace_edges(std::span<const uint8_t> trace) {
  std::vector<uint32_t> edges;
  for (size_t i = 0; i < trace.size(); i++)
    if (trace[i] != 0) edges.push_back(static_cast<uint32_t>(i));
  return edges;
}

}  // namespace tokfuzz
