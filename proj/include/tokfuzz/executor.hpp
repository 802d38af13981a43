#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codec.hpp"
#include "token_map.hpp"

namespace tokfuzz {

enum class ExecStatus : uint8_t {
  parse_ok = 0,
  parse_error = 1,
  runtime_error = 2,
  crash = 3,
  timeout = 4,
};

const char* exec_status_name(ExecStatus s);

struct ExecResult {
  ExecStatus status = ExecStatus::parse_ok;
  uint16_t assertion_id = 0;  // nonzero iff status == crash
  uint64_t exec_cost = 0;     // deterministic work units reported by the target
  uint64_t exec_micros = 0;   // wall clock, reporting only
  const uint8_t* trace = nullptr;  // executor-owned; valid until the next run
  size_t trace_size = 0;
};

struct TargetConfig {
  std::string target_path;
  std::vector<std::string> args = {"serve"};
  uint32_t timeout_ms = 100;
  uint64_t memory_limit = 1ull << 30;
  bool persistent = true;
};

// One target process and its shared coverage region. Respawns the process
// transparently after crashes, timeouts, and protocol faults. Not shareable
// across workers.
class Executor {
 public:
  // expected_map_size must match the size the target announces.
  Executor(const TargetConfig& config, uint32_t expected_map_size);
  ~Executor();
  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  ExecResult run_input(const EncodedInput& input, const TokenMap& map);
  ExecResult run_text(const std::string& program);

  uint64_t respawns() const { return respawns_; }

 private:
  void spawn();
  void kill_child();
  void reap();

  TargetConfig config_;
  uint32_t map_size_;
  std::string shm_name_;
  uint8_t* region_ = nullptr;
  int child_pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  bool alive_ = false;
  uint64_t respawns_ = 0;
};

}  // namespace tokfuzz
