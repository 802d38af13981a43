#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>

#include "codec.hpp"
#include "executor.hpp"
#include "token_map.hpp"

namespace tokfuzz {

struct CrashSignature {
  uint16_t assertion_id = 0;
  ExecStatus status = ExecStatus::crash;  // crash or timeout

  bool operator<(const CrashSignature& o) const {
    if (assertion_id != o.assertion_id) return assertion_id < o.assertion_id;
    return static_cast<uint8_t>(status) < static_cast<uint8_t>(o.status);
  }
  bool operator==(const CrashSignature& o) const {
    return assertion_id == o.assertion_id && status == o.status;
  }

  // Directory key under <corpus>/crashes/. Timeouts use a reserved name so
  // they are never confused with assertion ids.
  std::string dir_name() const {
    if (status == ExecStatus::timeout) return "timeout";
    return std::to_string(assertion_id);
  }
};

struct CrashReport {
  CrashSignature signature;
  uint64_t first_seen_exec = 0;
  EncodedInput witness;        // token mode
  std::string witness_bytes;   // byte mode
  std::string decoded_text;
};

// Deduplicating crash store. One witness plus report.txt per signature.
class CrashStore {
 public:
  explicit CrashStore(std::filesystem::path crashes_dir);

  // True when this signature is new; a new signature persists artifacts.
  bool record_tokens(const CrashSignature& sig, const EncodedInput& input,
                     const TokenMap& map, uint64_t exec_index);
  bool record_bytes(const CrashSignature& sig, const std::string& bytes,
                    uint64_t exec_index);

  // Bugs only; the reserved timeout signature is counted separately.
  size_t unique_bugs() const;
  size_t unique_timeouts() const;
  const std::map<CrashSignature, CrashReport>& reports() const {
    return reports_;
  }
  std::map<CrashSignature, CrashReport>& reports() { return reports_; }
  const std::filesystem::path& dir() const { return dir_; }

  // Appends the minimized witness to the signature's report.txt.
  void write_minimized(const CrashSignature& sig, const std::string& decoded);

 private:
  std::filesystem::path dir_;
  std::map<CrashSignature, CrashReport> reports_;
};

using ReplayFn = std::function<ExecResult(const EncodedInput&)>;

// Greedy reduction to a 1-minimal witness: semicolon-delimited statements
// largest-first, then power-of-two token runs down to single tokens, looped
// to a fixed point. Throws ReproFailure if the witness does not reproduce
// its signature on entry.
EncodedInput minimize(const EncodedInput& witness, const CrashSignature& sig,
                      uint16_t semicolon_code, size_t map_size,
                      const ReplayFn& replay);

}  // namespace tokfuzz
