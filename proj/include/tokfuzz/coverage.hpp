#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tokfuzz/errors.hpp"

namespace tokfuzz {

// 8-bit saturating hit counts, power-of-two cell count.
inline constexpr size_t kCoverageMapSize = 65536;

// cells[(prev ^ cur) % size]++, saturating at 255. The caller then advances
// prev to cur >> 1 (see EdgeProbe).
inline void record_edge(uint8_t* cells, size_t size, uint32_t prev,
                        uint32_t cur) {
  uint8_t& cell = cells[(prev ^ cur) & (size - 1)];
  if (cell != 0xff) cell++;
}

// Keeps the prev_loc state for a probe stream.
struct EdgeProbe {
  uint8_t* cells = nullptr;
  size_t size = kCoverageMapSize;
  uint32_t prev = 0;

  void hit(uint32_t site) {
    record_edge(cells, size, prev, site);
    prev = site >> 1;
  }
  void reset() { prev = 0; }
};

// Hit count -> power-of-two bucket mask (classes 1,2,3,4-7,8-15,16-31,
// 32-127,128-255).
uint8_t bucketize(uint8_t count);

enum class Novelty : uint8_t { nothing = 0, new_bucket = 1, new_edge = 2 };

class GlobalCoverage {
 public:
  explicit GlobalCoverage(size_t size = kCoverageMapSize);

  // Absorbs the trace. new_edge dominates new_bucket; never downgrades
  // previously seen state. Throws SizeMismatch on a wrong-sized trace.
  Novelty has_new_bits(std::span<const uint8_t> trace);

  uint64_t edges_seen() const { return edges_seen_; }
  size_t size() const { return virgin_.size(); }
  const std::vector<uint8_t>& virgin() const { return virgin_; }

 private:
  std::vector<uint8_t> virgin_;  // per-cell union of seen bucket masks
  uint64_t edges_seen_ = 0;
};

// Hash of the bucketized trace; equal iff every cell falls in the same
// bucket class.
uint64_t trace_signature(std::span<const uint8_t> trace);

// Cell indices with nonzero counts.
std::vector<uint32_t> trace_edges(std::span<const uint8_t> trace);

}  // namespace tokfuzz
