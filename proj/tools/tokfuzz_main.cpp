#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tokfuzz/corpus_io.hpp"
#include "tokfuzz/engine.hpp"
#include "tokfuzz/errors.hpp"
#include "tokfuzz/preproc.hpp"

namespace fs = std::filesystem;
using namespace tokfuzz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCrashes = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTarget = 3;

int cmd_preprocess(const fs::path& seeds, const fs::path& corpus,
                   uint64_t rng_seed, const std::string& extra_file) {
  std::vector<Token> extra;
  if (!extra_file.empty()) extra = parse_extra_tokens_file(extra_file);
  CorpusBuildResult r = preprocess_corpus(seeds, corpus, rng_seed, extra);
  printf("%zu seeds (%zu skipped), %zu tokens\n", r.seeds_seen,
         r.seeds_seen - r.seeds_kept, r.map.size());
  return kExitOk;
}

int cmd_fuzz(EngineConfig cfg, const EngineLimits& limits) {
  Engine engine(std::move(cfg));
  RunOutcome out = engine.run(limits);
  const CampaignStats& s = engine.stats();
  fprintf(stderr,
          "done: %" PRIu64 " execs, %" PRIu64 " parse_ok, %" PRIu64
          " edges, %" PRIu64 " unique bugs\n",
          s.total_execs, s.parse_ok_count, s.edges_seen, s.unique_crash_count);
  switch (out) {
    case RunOutcome::ok: return kExitOk;
    case RunOutcome::crashes_found: return kExitCrashes;
    case RunOutcome::target_failure: return kExitTarget;
  }
  return kExitOk;
}

int cmd_replay(const fs::path& corpus, const fs::path& input_file,
               TargetConfig target) {
  TokenMap map = TokenMap::load(corpus_layout::tokenmap_file(corpus));
  Executor exec(target, kCoverageMapSize);
  ExecResult r;
  if (input_file.extension() == ".tok") {
    EncodedInput codes = read_tok_file(input_file);
    printf("%s\n", decode(codes, map).c_str());
    r = exec.run_input(codes, map);
  } else {
    r = exec.run_text(read_bytes_file(input_file));
  }
  if (r.status == ExecStatus::crash)
    printf("status: crash assertion=%u\n", r.assertion_id);
  else
    printf("status: %s\n", exec_status_name(r.status));
  return kExitOk;
}

struct StatsRow {
  uint64_t unix_millis, total, parse_ok, parse_error, crashes, unique, edges;
};

std::vector<StatsRow> read_stats(const fs::path& corpus) {
  std::vector<StatsRow> rows;
  std::ifstream in(corpus_layout::stats_file(corpus));
  if (!in) return rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    StatsRow r;
    if (sscanf(line.c_str(),
               "%" SCNu64 ",%" SCNu64 ",%" SCNu64 ",%" SCNu64 ",%" SCNu64
               ",%" SCNu64 ",%" SCNu64,
               &r.unix_millis, &r.total, &r.parse_ok, &r.parse_error,
               &r.crashes, &r.unique, &r.edges) == 7)
      rows.push_back(r);
  }
  return rows;
}

std::string corpus_mode(const fs::path& corpus) {
  std::ifstream in(corpus_layout::mode_file(corpus));
  std::string mode;
  if (!(in && std::getline(in, mode))) mode = "unknown";
  return mode;
}

double parse_rate(const StatsRow& r) {
  return r.total ? 100.0 * static_cast<double>(r.parse_ok) /
                       static_cast<double>(r.total)
                 : 0.0;
}

bool print_one_report(const fs::path& corpus) {
  std::vector<StatsRow> rows = read_stats(corpus);
  printf("corpus %s (mode %s)\n", corpus.string().c_str(),
         corpus_mode(corpus).c_str());
  if (rows.empty()) {
    printf("  no data\n");
    return false;
  }
  const StatsRow& f = rows.back();
  uint64_t other = f.total - f.parse_ok - f.parse_error - f.crashes;
  printf("  execs            %" PRIu64 "\n", f.total);
  printf("  parse_ok         %" PRIu64 " (%.2f%%)\n", f.parse_ok,
         parse_rate(f));
  printf("  parse_error      %" PRIu64 " (%.2f%%)\n", f.parse_error,
         f.total ? 100.0 * static_cast<double>(f.parse_error) /
                       static_cast<double>(f.total)
                 : 0.0);
  printf("  crashes          %" PRIu64 " (%.2f%%)\n", f.crashes,
         f.total ? 100.0 * static_cast<double>(f.crashes) /
                       static_cast<double>(f.total)
                 : 0.0);
  printf("  other            %" PRIu64 " (%.2f%%)\n", other,
         f.total ? 100.0 * static_cast<double>(other) /
                       static_cast<double>(f.total)
                 : 0.0);
  printf("  edges seen       %" PRIu64 "\n", f.edges);

  printf("  unique bugs      %" PRIu64 "\n", f.unique);
  fs::path cdir = corpus_layout::crashes_dir(corpus);
  if (fs::is_directory(cdir)) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(cdir))
      if (e.is_directory()) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    for (const std::string& n : names) {
      if (n == "timeout")
        printf("    timeout witnesses recorded\n");
      else
        printf("    assertion %s\n", n.c_str());
    }
  }

  printf("  coverage over time (seconds,edges):\n");
  size_t stride = rows.size() <= 32 ? 1 : (rows.size() + 30) / 31;
  for (size_t i = 0; i < rows.size(); i += stride) {
    printf("    %.1f,%" PRIu64 "\n",
           static_cast<double>(rows[i].unix_millis - rows[0].unix_millis) /
               1000.0,
           rows[i].edges);
  }
  if ((rows.size() - 1) % stride != 0)
    printf("    %.1f,%" PRIu64 "\n",
           static_cast<double>(rows.back().unix_millis - rows[0].unix_millis) /
               1000.0,
           rows.back().edges);
  return true;
}

int cmd_report(const fs::path& corpus_a, const fs::path& corpus_b) {
  bool a = print_one_report(corpus_a);
  if (corpus_b.empty()) return kExitOk;
  bool b = print_one_report(corpus_b);
  if (a && b) {
    double ra = parse_rate(read_stats(corpus_a).back());
    double rb = parse_rate(read_stats(corpus_b).back());
    if (rb > 0.0)
      printf("parse-rate ratio (%s / %s): %.2f\n", corpus_a.string().c_str(),
             corpus_b.string().c_str(), ra / rb);
    else
      printf("parse-rate ratio (%s / %s): n/a\n", corpus_a.string().c_str(),
             corpus_b.string().c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"token-level fuzzer for the bundled MiniJS target"};
  app.require_subcommand(1);

  std::string seeds_dir, corpus_dir, corpus_dir_b, target_path, extra_file;
  std::string input_file, mode_name = "token";
  uint64_t rng_seed = 1, max_execs = 0, max_seconds = 0;
  uint32_t workers = 1, timeout_ms = 100;
  bool no_walk = false, quiet = false;

  CLI::App* pre = app.add_subcommand("preprocess",
                                     "build a corpus from a seed directory");
  pre->add_option("--seeds", seeds_dir, "seed directory")->required();
  pre->add_option("--corpus", corpus_dir, "corpus directory")->required();
  pre->add_option("--rng-seed", rng_seed, "rng seed");
  pre->add_option("--extra-tokens", extra_file,
                  "file of extra tokens, one per line");

  CLI::App* fuzz = app.add_subcommand("fuzz", "run a fuzzing campaign");
  fuzz->add_option("--corpus", corpus_dir, "corpus directory")->required();
  fuzz->add_option("--target", target_path, "target binary")->required();
  fuzz->add_option("--mode", mode_name, "token|byte")
      ->check(CLI::IsMember({"token", "byte"}));
  fuzz->add_option("--workers", workers, "worker count");
  fuzz->add_option("--max-execs", max_execs, "execution budget, 0 = unlimited");
  fuzz->add_option("--max-seconds", max_seconds, "time budget, 0 = unlimited");
  fuzz->add_option("--rng-seed", rng_seed, "rng seed");
  fuzz->add_option("--timeout-ms", timeout_ms, "per-exec timeout");
  fuzz->add_flag("--no-walk", no_walk, "skip the deterministic walk pass");
  fuzz->add_flag("--quiet", quiet, "suppress the live status line");

  CLI::App* replay = app.add_subcommand("replay", "execute one stored input");
  replay->add_option("--corpus", corpus_dir, "corpus directory")->required();
  replay->add_option("--target", target_path, "target binary")->required();
  replay->add_option("--timeout-ms", timeout_ms, "per-exec timeout");
  replay->add_option("input", input_file, "input file (.tok or raw text)")
      ->required();

  CLI::App* report = app.add_subcommand("report", "summarize campaign output");
  report->add_option("corpus", corpus_dir, "corpus directory")->required();
  report->add_option("corpus_b", corpus_dir_b,
                     "second corpus for a side-by-side ratio");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pre->parsed())
      return cmd_preprocess(seeds_dir, corpus_dir, rng_seed, extra_file);
    if (fuzz->parsed()) {
      EngineConfig cfg;
      cfg.corpus_dir = corpus_dir;
      cfg.target.target_path = target_path;
      cfg.target.timeout_ms = timeout_ms;
      cfg.mode = mode_name == "byte" ? FuzzMode::byte : FuzzMode::token;
      cfg.rng_seed = rng_seed;
      cfg.workers = workers;
      cfg.walk_enabled = !no_walk;
      cfg.quiet = quiet;
      EngineLimits limits{max_execs, max_seconds};
      return cmd_fuzz(std::move(cfg), limits);
    }
    if (replay->parsed()) {
      TargetConfig t;
      t.target_path = target_path;
      t.timeout_ms = timeout_ms;
      return cmd_replay(corpus_dir, input_file, t);
    }
    if (report->parsed()) return cmd_report(corpus_dir, corpus_dir_b);
  } catch (const SpawnFailure& e) {
    fprintf(stderr, "target failure: %s\n", e.what());
    return kExitTarget;
  } catch (const HandshakeMismatch& e) {
    fprintf(stderr, "target failure: %s\n", e.what());
    return kExitTarget;
  } catch (const Error& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
