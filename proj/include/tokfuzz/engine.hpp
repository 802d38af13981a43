#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "codec.hpp"
#include "coverage.hpp"
#include "executor.hpp"
#include "mutator.hpp"
#include "rng.hpp"
#include "token_map.hpp"
#include "triage.hpp"

namespace tokfuzz {

enum class FuzzMode : uint8_t { token, byte };

struct EngineConfig {
  std::filesystem::path corpus_dir;
  TargetConfig target;
  FuzzMode mode = FuzzMode::token;
  uint64_t rng_seed = 1;
  uint32_t workers = 1;
  bool walk_enabled = true;
  // Substitution codes tried per position when walking a discovered entry.
  // Seed entries always get the value-complete walk.
  uint32_t walk_k = 16;
  bool quiet = false;
  MutationBudget budget;
};

// Zeros mean unlimited on that axis; both zero means dry run only.
struct EngineLimits {
  uint64_t max_execs = 0;
  uint64_t max_seconds = 0;
};

struct CorpusEntry {
  uint64_t id = 0;
  EncodedInput input;  // token codes, or byte values one per element
  uint64_t exec_cost = 0;
  uint64_t exec_micros = 0;
  size_t token_len = 0;  // |input|
  Novelty novelty = Novelty::new_bucket;
  bool favored = false;
  uint64_t times_fuzzed = 0;
  bool walked = false;
  bool from_seed = false;
  uint64_t trace_hash = 0;
  std::vector<uint32_t> edges;
};

struct CampaignStats {
  uint64_t total_execs = 0;
  uint64_t parse_ok_count = 0;
  uint64_t parse_error_count = 0;
  uint64_t runtime_error_count = 0;
  uint64_t crash_count = 0;
  uint64_t timeout_count = 0;
  uint64_t unique_crash_count = 0;
  uint64_t edges_seen = 0;
  uint64_t start_millis = 0;
  uint64_t dry_run_execs = 0;
  uint64_t dry_run_edges = 0;
  uint64_t protocol_errors = 0;  // excluded from total_execs

  bool conserved() const {
    return parse_ok_count + parse_error_count + runtime_error_count +
               crash_count + timeout_count ==
           total_execs;
  }
};

enum class RunOutcome { ok, crashes_found, target_failure };

// Evolutionary loop over a preprocessed corpus directory. Workers own their
// target process and rng stream; corpus, coverage, and stats mutate only
// under one scheduler lock, never held across an execution. Single-worker
// runs with a fixed rng seed are exactly reproducible, stats rows and queue
// files included.
class Engine {
 public:
  explicit Engine(EngineConfig config);
  ~Engine();

  RunOutcome run(const EngineLimits& limits);

  const CampaignStats& stats() const { return stats_; }
  const std::vector<CorpusEntry>& corpus() const { return corpus_; }
  const TokenMap& token_map() const { return map_; }
  size_t favored_count() const;

 private:
  struct Worker;

  void load_corpus();
  void check_mode_marker();
  void dry_run(Worker& w);
  void fuzz_loop(Worker& w);
  bool run_mutant(Worker& w, const EncodedInput& mutant);
  std::optional<ExecResult> execute(Worker& w, const EncodedInput& input);
  void account(const ExecResult& r);                             // lock held
  void note_crash(const EncodedInput& in, const ExecResult& r);  // lock held
  void add_entry(Worker& w, const EncodedInput& input, const ExecResult& r,
                 Novelty novelty);
  CorpusEntry trim(Worker& w, const EncodedInput& input, const ExecResult& r);
  void recompute_favored();       // lock held
  size_t select_next(Rng& rng);   // lock held
  uint64_t energy(const CorpusEntry& e) const;  // lock held
  uint64_t median_cost() const;
  bool limit_reached() const;     // lock held
  bool done();
  void checkpoint(bool force);    // lock held
  void status_line();
  void minimize_crashes(Worker& w);
  std::string entry_text(const EncodedInput& input) const;
  void write_queue_file(const CorpusEntry& e) const;

  EngineConfig cfg_;
  EngineLimits limits_;
  TokenMap map_;
  std::vector<std::string> dict_;  // byte mode
  std::optional<uint16_t> semicolon_code_;
  GlobalCoverage coverage_;
  CampaignStats stats_;
  std::unique_ptr<CrashStore> crashes_;
  std::vector<CorpusEntry> corpus_;
  std::vector<int32_t> top_rated_;  // entry index per edge, -1 = none
  uint64_t next_id_ = 0;
  size_t cursor_ = 0;
  uint64_t deadline_millis_ = 0;
  uint64_t last_checkpoint_execs_ = 0;
  std::mutex mu_;
  std::atomic<uint32_t> spawn_failures_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace tokfuzz
