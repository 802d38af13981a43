#pragma once

#include <cstdint>
#include <vector>

#include "tokfuzz/coverage.hpp"

namespace minijs {

constexpr uint32_t fnv1a(const char* s) {
  uint32_t h = 2166136261u;
  while (*s) {
    h ^= static_cast<uint8_t>(*s++);
    h *= 16777619u;
  }
  return h;
}

// Process-wide coverage sink. Serve mode points it at the shared region;
// standalone runs use local storage.
struct CovSink {
  tokfuzz::EdgeProbe edge;
  uint64_t cost = 0;
  std::vector<uint8_t> local;

  CovSink() { use_local(); }

  void use_local() {
    local.assign(tokfuzz::kCoverageMapSize, 0);
    edge.cells = local.data();
    edge.size = local.size();
  }
  void use_region(uint8_t* cells, size_t size) {
    edge.cells = cells;
    edge.size = size;
  }
  void reset() {
    for (size_t i = 0; i < edge.size; i++) edge.cells[i] = 0;
    edge.reset();
    cost = 0;
  }
  void hit(uint32_t site) {
    edge.hit(site);
    cost++;
  }
};

CovSink& sink();

inline void probe(uint32_t site) { sink().hit(site); }

}  // namespace minijs

// Site ids are stable hashes of the probe name.
#define MJS_PROBE(name)                                          \
  do {                                                           \
    static constexpr uint32_t mjs_site = ::minijs::fnv1a(name); \
    ::minijs::probe(mjs_site);                                   \
  } while (0)
