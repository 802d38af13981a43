#include "tokfuzz/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <span>
#include <thread>

#include "tokfuzz/corpus_io.hpp"
#include "tokfuzz/errors.hpp"

namespace tokfuzz {

namespace fs = std::filesystem;

static uint64_t now_millis() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

struct Engine::Worker {
  std::unique_ptr<Executor> exec;
  Rng rng;
  Worker(const TargetConfig& t, uint32_t map_size, Rng r)
      : exec(std::make_unique<Executor>(t, map_size)), rng(r) {}
};

Engine::Engine(EngineConfig config)
    : cfg_(std::move(config)), coverage_(kCoverageMapSize) {}

Engine::~Engine() = default;

std::string Engine::entry_text(const EncodedInput& input) const {
  if (cfg_.mode == FuzzMode::token) return decode(input, map_);
  std::string s;
  s.reserve(input.size());
  for (uint16_t c : input) s.push_back(static_cast<char>(c & 0xff));
  return s;
}

static EncodedInput bytes_to_input(const std::string& bytes) {
  EncodedInput v;
  v.reserve(bytes.size());
  for (char c : bytes) v.push_back(static_cast<uint8_t>(c));
  return v;
}

void Engine::check_mode_marker() {
  const char* want = cfg_.mode == FuzzMode::token ? "token" : "byte";
  fs::path marker = corpus_layout::mode_file(cfg_.corpus_dir);
  if (fs::exists(marker)) {
    std::ifstream in(marker);
    std::string have;
    std::getline(in, have);
    if (have != want)
      throw CorpusFailure("corpus at " + cfg_.corpus_dir.string() +
                          " was fuzzed in '" + have + "' mode");
    return;
  }
  std::ofstream out(marker);
  out << want << "\n";
}

static uint64_t id_from_queue_name(const fs::path& p) {
  std::string stem = p.stem().string();  // id_NNNNNN
  return std::stoull(stem.substr(3));
}

void Engine::load_corpus() {
  fs::path qdir = corpus_layout::queue_dir(cfg_.corpus_dir);
  if (!fs::is_directory(qdir))
    throw CorpusFailure("no queue directory under " + cfg_.corpus_dir.string() +
                        "; preprocess seeds first");
  std::vector<std::pair<uint64_t, fs::path>> files;
  for (const fs::path& p : list_queue_files(cfg_.corpus_dir, "tok"))
    files.emplace_back(id_from_queue_name(p), p);
  if (cfg_.mode == FuzzMode::byte)
    for (const fs::path& p : list_queue_files(cfg_.corpus_dir, "raw"))
      files.emplace_back(id_from_queue_name(p), p);
  std::sort(files.begin(), files.end());
  for (const auto& [id, path] : files) {
    CorpusEntry e;
    e.id = id;
    e.from_seed = true;
    if (path.extension() == ".tok") {
      EncodedInput codes = read_tok_file(path);
      e.input = cfg_.mode == FuzzMode::token
                    ? codes
                    : bytes_to_input(decode(codes, map_));
    } else {
      e.input = bytes_to_input(read_bytes_file(path));
    }
    e.token_len = e.input.size();
    corpus_.push_back(std::move(e));
    next_id_ = std::max(next_id_, id + 1);
  }
  if (corpus_.empty())
    throw CorpusFailure("queue at " + qdir.string() + " holds no entries");
}

std::optional<ExecResult> Engine::execute(Worker& w,
                                          const EncodedInput& input) {
  try {
    ExecResult r = cfg_.mode == FuzzMode::token
                       ? w.exec->run_input(input, map_)
                       : w.exec->run_text(entry_text(input));
    spawn_failures_.store(0);
    return r;
  } catch (const ProtocolError&) {
    std::lock_guard lk(mu_);
    stats_.protocol_errors++;
    return std::nullopt;
  } catch (const SpawnFailure&) {
    if (spawn_failures_.fetch_add(1) + 1 >= 3) aborted_.store(true);
    return std::nullopt;
  }
}

void Engine::account(const ExecResult& r) {
  stats_.total_execs++;
  switch (r.status) {
    case ExecStatus::parse_ok: stats_.parse_ok_count++; break;
    case ExecStatus::parse_error: stats_.parse_error_count++; break;
    case ExecStatus::runtime_error: stats_.runtime_error_count++; break;
    case ExecStatus::crash: stats_.crash_count++; break;
    case ExecStatus::timeout: stats_.timeout_count++; break;
  }
}

void Engine::note_crash(const EncodedInput& in, const ExecResult& r) {
  if (r.status != ExecStatus::crash && r.status != ExecStatus::timeout) return;
  CrashSignature sig{
      r.status == ExecStatus::crash ? r.assertion_id : uint16_t{0}, r.status};
  if (cfg_.mode == FuzzMode::token)
    crashes_->record_tokens(sig, in, map_, stats_.total_execs);
  else
    crashes_->record_bytes(sig, entry_text(in), stats_.total_execs);
  stats_.unique_crash_count = crashes_->unique_bugs();
}

bool Engine::limit_reached() const {
  if (limits_.max_execs && stats_.total_execs >= limits_.max_execs) return true;
  if (deadline_millis_ && now_millis() >= deadline_millis_) return true;
  return false;
}

bool Engine::done() {
  std::lock_guard lk(mu_);
  return aborted_.load() || limit_reached();
}

CorpusEntry Engine::trim(Worker& w, const EncodedInput& input,
                         const ExecResult& r) {
  CorpusEntry e;
  e.input = input;
  e.exec_cost = r.exec_cost;
  e.exec_micros = r.exec_micros;
  e.trace_hash = trace_signature({r.trace, r.trace_size});
  e.edges = trace_edges({r.trace, r.trace_size});
  ExecStatus status = r.status;

  bool changed = true;
  while (changed && e.input.size() > 1) {
    changed = false;
    size_t len = 1;
    while (len * 2 <= std::max<size_t>(e.input.size() / 16, 1)) len *= 2;
    for (; len >= 1; len /= 2) {
      for (size_t pos = 0; pos + len <= e.input.size();) {
        if (len >= e.input.size() || done()) {
          e.token_len = e.input.size();
          if (done()) return e;
          break;
        }
        EncodedInput cand;
        cand.reserve(e.input.size() - len);
        cand.insert(cand.end(), e.input.begin(), e.input.begin() + pos);
        cand.insert(cand.end(), e.input.begin() + pos + len, e.input.end());
        auto cr = execute(w, cand);
        if (!cr) {
          pos += len;
          continue;
        }
        {
          std::lock_guard lk(mu_);
          account(*cr);
          note_crash(cand, *cr);
        }
        uint64_t h = trace_signature({cr->trace, cr->trace_size});
        if (cr->status == status && h == e.trace_hash) {
          e.input = std::move(cand);
          e.exec_cost = cr->exec_cost;
          e.exec_micros = cr->exec_micros;
          e.edges = trace_edges({cr->trace, cr->trace_size});
          changed = true;
          // the removed run's successor slid into pos; test it next
        } else {
          pos += len;
        }
      }
      if (len == 1) break;
    }
  }
  e.token_len = e.input.size();
  return e;
}

void Engine::write_queue_file(const CorpusEntry& e) const {
  fs::path qdir = corpus_layout::queue_dir(cfg_.corpus_dir);
  if (cfg_.mode == FuzzMode::token) {
    write_tok_file(qdir / corpus_layout::queue_name(e.id, "tok"), e.input);
  } else {
    write_bytes_file(qdir / corpus_layout::queue_name(e.id, "raw"),
                     entry_text(e.input));
  }
}

void Engine::add_entry(Worker& w, const EncodedInput& input,
                       const ExecResult& r, Novelty novelty) {
  CorpusEntry e = trim(w, input, r);
  std::lock_guard lk(mu_);
  e.id = next_id_++;
  e.token_len = e.input.size();
  e.novelty = novelty;
  write_queue_file(e);
  corpus_.push_back(std::move(e));
  recompute_favored();
}

void Engine::recompute_favored() {
  std::fill(top_rated_.begin(), top_rated_.end(), -1);
  auto score = [&](const CorpusEntry& e) {
    return std::max<uint64_t>(e.exec_cost, 1) *
           std::max<uint64_t>(e.token_len, 1);
  };
  for (size_t i = 0; i < corpus_.size(); i++) {
    for (uint32_t edge : corpus_[i].edges) {
      int32_t cur = top_rated_[edge];
      if (cur < 0 || score(corpus_[i]) < score(corpus_[cur]))
        top_rated_[edge] = static_cast<int32_t>(i);
    }
  }
  for (auto& e : corpus_) e.favored = false;
  std::vector<bool> covered(top_rated_.size(), false);
  for (size_t edge = 0; edge < top_rated_.size(); edge++) {
    if (covered[edge] || top_rated_[edge] < 0) continue;
    CorpusEntry& e = corpus_[top_rated_[edge]];
    e.favored = true;
    for (uint32_t seen : e.edges) covered[seen] = true;
  }
}

size_t Engine::favored_count() const {
  size_t n = 0;
  for (const auto& e : corpus_)
    if (e.favored) n++;
  return n;
}

size_t Engine::select_next(Rng& rng) {
  bool any_favored = false;
  for (const auto& e : corpus_)
    if (e.favored) {
      any_favored = true;
      break;
    }
  for (;;) {
    size_t idx = cursor_ % corpus_.size();
    cursor_++;
    if (any_favored && !corpus_[idx].favored && rng.chance(3, 4)) continue;
    return idx;
  }
}

uint64_t Engine::median_cost() const {
  std::vector<uint64_t> costs;
  costs.reserve(corpus_.size());
  for (const auto& e : corpus_)
    costs.push_back(std::max<uint64_t>(e.exec_cost, 1));
  auto mid = costs.begin() + costs.size() / 2;
  std::nth_element(costs.begin(), mid, costs.end());
  return *mid;
}

uint64_t Engine::energy(const CorpusEntry& e) const {
  double weight = e.novelty == Novelty::new_edge ? 2.0 : 1.0;
  double speed = static_cast<double>(median_cost()) /
                 static_cast<double>(std::max<uint64_t>(e.exec_cost, 1));
  speed = std::clamp(speed, 0.25, 4.0);
  auto n = static_cast<uint64_t>(weight * speed * 256.0);
  return std::clamp<uint64_t>(n, 16, 4096);
}

void Engine::checkpoint(bool force) {
  // Exec-count cadence keeps row positions reproducible for a fixed seed.
  if (!force && stats_.total_execs - last_checkpoint_execs_ < 5000) return;
  last_checkpoint_execs_ = stats_.total_execs;
  uint64_t now = now_millis();
  stats_.edges_seen = coverage_.edges_seen();
  fs::path path = corpus_layout::stats_file(cfg_.corpus_dir);
  bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (fresh)
    out << "unix_millis,total_execs,parse_ok,parse_error,crashes,"
           "unique_crashes,edges_seen\n";
  out << now << ',' << stats_.total_execs << ',' << stats_.parse_ok_count
      << ',' << stats_.parse_error_count << ',' << stats_.crash_count << ','
      << stats_.unique_crash_count << ',' << stats_.edges_seen << "\n";
  if (!cfg_.quiet) status_line();
}

void Engine::status_line() {
  uint64_t elapsed = std::max<uint64_t>(now_millis() - stats_.start_millis, 1);
  fprintf(stderr,
          "\r[%s] execs %" PRIu64 " (%.0f/s) corpus %zu edges %" PRIu64
          " crashes %" PRIu64 "   ",
          cfg_.mode == FuzzMode::token ? "token" : "byte", stats_.total_execs,
          1000.0 * static_cast<double>(stats_.total_execs) /
              static_cast<double>(elapsed),
          corpus_.size(), stats_.edges_seen, stats_.unique_crash_count);
}

void Engine::dry_run(Worker& w) {
  std::vector<CorpusEntry> kept;
  kept.reserve(corpus_.size());
  for (auto& e : corpus_) {
    if (aborted_.load()) break;
    auto r = execute(w, e.input);
    if (!r) continue;
    account(*r);
    note_crash(e.input, *r);
    std::span<const uint8_t> trace{r->trace, r->trace_size};
    bool empty = std::all_of(trace.begin(), trace.end(),
                             [](uint8_t c) { return c == 0; });
    if (empty) continue;  // contributes nothing; drop the seed
    Novelty nov = Novelty::nothing;
    if (r->status != ExecStatus::timeout) nov = coverage_.has_new_bits(trace);
    e.exec_cost = r->exec_cost;
    e.exec_micros = r->exec_micros;
    e.token_len = e.input.size();
    e.trace_hash = trace_signature(trace);
    e.edges = trace_edges(trace);
    e.novelty =
        nov == Novelty::new_edge ? Novelty::new_edge : Novelty::new_bucket;
    kept.push_back(std::move(e));
  }
  corpus_ = std::move(kept);
  stats_.dry_run_execs = stats_.total_execs;
  stats_.dry_run_edges = coverage_.edges_seen();
}

bool Engine::run_mutant(Worker& w, const EncodedInput& mutant) {
  auto r = execute(w, mutant);
  if (!r) return !done();
  Novelty nov = Novelty::nothing;
  {
    std::lock_guard lk(mu_);
    account(*r);
    note_crash(mutant, *r);
    if (r->status != ExecStatus::timeout)
      nov = coverage_.has_new_bits({r->trace, r->trace_size});
  }
  if (nov != Novelty::nothing) add_entry(w, mutant, *r, nov);
  {
    std::lock_guard lk(mu_);
    checkpoint(false);
  }
  return !done();
}

void Engine::fuzz_loop(Worker& w) {
  // Donor lookups read the corpus; the caller holds the lock.
  DonorSampler donor = [this, &w]() -> const EncodedInput* {
    if (corpus_.empty()) return nullptr;
    return &corpus_[w.rng.below(corpus_.size())].input;
  };
  while (!done()) {
    EncodedInput base;
    bool do_walk = false;
    uint32_t walk_k = 0;
    uint64_t n = 0;
    {
      std::lock_guard lk(mu_);
      size_t idx = select_next(w.rng);
      corpus_[idx].times_fuzzed++;
      base = corpus_[idx].input;
      do_walk = cfg_.walk_enabled && cfg_.mode == FuzzMode::token &&
                !corpus_[idx].walked;
      corpus_[idx].walked = true;
      walk_k = corpus_[idx].from_seed ? static_cast<uint32_t>(map_.size())
                                      : cfg_.walk_k;
      n = energy(corpus_[idx]);
    }
    if (do_walk) {
      DeterministicWalk walk(base, map_.size(), walk_k);
      EncodedInput mut;
      while (walk.next(mut))
        if (!run_mutant(w, mut)) return;
    }
    for (uint64_t i = 0; i < n; i++) {
      EncodedInput mut;
      {
        std::lock_guard lk(mu_);
        mut = cfg_.mode == FuzzMode::token
                  ? havoc(base, map_.size(), semicolon_code_, donor, w.rng,
                          cfg_.budget)
                  : byte_havoc(base, dict_, w.rng, cfg_.budget);
      }
      if (!run_mutant(w, mut)) return;
    }
  }
}

void Engine::minimize_crashes(Worker& w) {
  uint16_t semi;
  size_t space;
  if (cfg_.mode == FuzzMode::token) {
    if (!semicolon_code_) return;
    semi = *semicolon_code_;
    space = map_.size();
  } else {
    semi = static_cast<uint16_t>(';');
    space = 256;
  }
  ReplayFn replay = [&](const EncodedInput& v) -> ExecResult {
    auto r = execute(w, v);
    if (!r) return ExecResult{};  // parse_ok/0 never matches a crash signature
    return *r;
  };
  for (auto& [sig, report] : crashes_->reports()) {
    if (sig.status != ExecStatus::crash) continue;
    EncodedInput witness = cfg_.mode == FuzzMode::token
                               ? report.witness
                               : bytes_to_input(report.witness_bytes);
    try {
      EncodedInput small = minimize(witness, sig, semi, space, replay);
      crashes_->write_minimized(sig, entry_text(small));
    } catch (const ReproFailure&) {
      crashes_->write_minimized(sig, "(witness not stable in isolation)");
    }
  }
}

RunOutcome Engine::run(const EngineLimits& limits) {
  limits_ = limits;
  stats_ = CampaignStats{};
  stats_.start_millis = now_millis();
  deadline_millis_ =
      limits_.max_seconds ? stats_.start_millis + limits_.max_seconds * 1000
                          : 0;
  last_checkpoint_execs_ = 0;

  map_ = TokenMap::load(corpus_layout::tokenmap_file(cfg_.corpus_dir));
  semicolon_code_ = map_.code_of(make_token(TokenKind::punctuator, ";"));
  dict_.clear();
  if (cfg_.mode == FuzzMode::byte)
    for (const Token& t : map_.entries()) dict_.push_back(t.text);

  check_mode_marker();
  corpus_.clear();
  load_corpus();
  coverage_ = GlobalCoverage(kCoverageMapSize);
  top_rated_.assign(kCoverageMapSize, -1);
  crashes_ =
      std::make_unique<CrashStore>(corpus_layout::crashes_dir(cfg_.corpus_dir));
  cursor_ = 0;
  spawn_failures_.store(0);
  aborted_.store(false);

  Rng master(cfg_.rng_seed);
  std::vector<std::unique_ptr<Worker>> workers;
  try {
    for (uint32_t i = 0; i < std::max<uint32_t>(cfg_.workers, 1); i++)
      workers.push_back(std::make_unique<Worker>(cfg_.target, kCoverageMapSize,
                                                 master.fork(i)));
  } catch (const Error& e) {
    fprintf(stderr, "target did not come up: %s\n", e.what());
    return RunOutcome::target_failure;
  }

  dry_run(*workers[0]);
  if (corpus_.empty()) throw CorpusFailure("every seed produced zero coverage");
  recompute_favored();
  checkpoint(true);

  if ((limits_.max_execs || limits_.max_seconds) && !aborted_.load()) {
    if (workers.size() == 1) {
      fuzz_loop(*workers[0]);
    } else {
      std::vector<std::thread> threads;
      for (auto& w : workers)
        threads.emplace_back([this, &w] { fuzz_loop(*w); });
      for (auto& t : threads) t.join();
    }
  }

  checkpoint(true);
  if (!cfg_.quiet) fprintf(stderr, "\n");
  minimize_crashes(*workers[0]);

  if (aborted_.load()) return RunOutcome::target_failure;
  return crashes_->unique_bugs() ? RunOutcome::crashes_found : RunOutcome::ok;
}

}  // namespace tokfuzz
