#include "serve.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "interp.hpp"
#include "probes.hpp"
#include "tokfuzz/coverage.hpp"

namespace minijs {

namespace {

// Region layout: kCoverageMapSize hit-count cells, then a u64 cost counter.
constexpr size_t kRegionSize = tokfuzz::kCoverageMapSize + sizeof(uint64_t);

constexpr uint32_t kProtocolVersion = 1;
constexpr size_t kMaxProgramBytes = 8u << 20;

bool read_exact(int fd, void* buf, size_t n) {
  uint8_t* p = static_cast<uint8_t*>(buf);
  while (n > 0) {
    ssize_t r = read(fd, p, n);
    if (r <= 0) return false;
    p += r;
    n -= static_cast<size_t>(r);
  }
  return true;
}

bool write_exact(int fd, const void* buf, size_t n) {
  const uint8_t* p = static_cast<const uint8_t*>(buf);
  while (n > 0) {
    ssize_t w = write(fd, p, n);
    if (w <= 0) return false;
    p += w;
    n -= static_cast<size_t>(w);
  }
  return true;
}

void put_u32(uint8_t* p, uint32_t v) {
  p[0] = static_cast<uint8_t>(v);
  p[1] = static_cast<uint8_t>(v >> 8);
  p[2] = static_cast<uint8_t>(v >> 16);
  p[3] = static_cast<uint8_t>(v >> 24);
}

uint32_t get_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint8_t* attach_region() {
  const char* name = std::getenv("TOKFUZZ_SHM");
  if (!name || !*name) return nullptr;
  int fd = shm_open(name, O_RDWR, 0600);
  if (fd < 0) return nullptr;
  void* mem = mmap(nullptr, kRegionSize, PROT_READ | PROT_WRITE, MAP_SHARED,
                   fd, 0);
  close(fd);
  if (mem == MAP_FAILED) return nullptr;
  return static_cast<uint8_t*>(mem);
}

}  // namespace

int serve() {
  uint8_t* region = attach_region();
  uint64_t* cost_out = nullptr;
  if (region) {
    sink().use_region(region, tokfuzz::kCoverageMapSize);
    cost_out = reinterpret_cast<uint64_t*>(region + tokfuzz::kCoverageMapSize);
  }

  uint8_t hello[12];
  std::memcpy(hello, "HELO", 4);
  put_u32(hello + 4, kProtocolVersion);
  put_u32(hello + 8, tokfuzz::kCoverageMapSize);
  if (!write_exact(1, hello, sizeof(hello))) return 1;

  EvalLimits limits;
  std::string program;
  for (;;) {
    uint8_t head[8];
    // Channel close between frames is the clean shutdown path.
    ssize_t first = read(0, head, 1);
    if (first == 0) return 0;
    if (first < 0 || !read_exact(0, head + 1, sizeof(head) - 1)) return 1;
    if (std::memcmp(head, "EXEC", 4) != 0) return 1;
    uint32_t len = get_u32(head + 4);
    if (len > kMaxProgramBytes) return 1;
    program.resize(len);
    if (len > 0 && !read_exact(0, program.data(), len)) return 1;

    sink().reset();
    RunResult res = run_program(program, limits, nullptr);
    if (cost_out) *cost_out = sink().cost;

    uint8_t stat[7];
    std::memcpy(stat, "STAT", 4);
    stat[4] = static_cast<uint8_t>(res.status);
    stat[5] = static_cast<uint8_t>(res.assertion_id);
    stat[6] = static_cast<uint8_t>(res.assertion_id >> 8);
    if (!write_exact(1, stat, sizeof(stat))) return 1;

    // A fired assertion leaves this process dead, like the real thing;
    // the executor respawns on crash status.
    if (res.status == ExecStatus::crash) {
      fsync(1);
      _exit(0);
    }
  }
}

}  // namespace minijs
