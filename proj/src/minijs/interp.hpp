#pragma once

#include <cstdint>
#include <string>

namespace minijs {

// Wire status byte. Order is part of the protocol.
enum class ExecStatus : uint8_t {
  parse_ok = 0,
  parse_error = 1,
  runtime_error = 2,
  crash = 3,
  timeout = 4,
};

const char* status_name(ExecStatus s);

struct EvalLimits {
  uint64_t max_steps = 1'000'000;
  uint64_t max_cells = 1'000'000;
  uint64_t max_string_bytes = 16ull << 20;
  uint64_t max_output_bytes = 1ull << 20;
  int max_call_depth = 200;
};

struct RunResult {
  ExecStatus status = ExecStatus::parse_ok;
  uint16_t assertion_id = 0;  // nonzero iff status == crash
  std::string message;        // parse or runtime error text
};

// Lex + parse + evaluate. Total: every input yields a result within the
// step budget. out receives print output when non-null; the evaluation
// work done is identical either way.
RunResult run_program(const std::string& source, const EvalLimits& limits,
                      std::string* out);

}  // namespace minijs
