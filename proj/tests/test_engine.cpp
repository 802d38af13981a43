#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tokfuzz/corpus_io.hpp"
#include "tokfuzz/engine.hpp"
#include "tokfuzz/preproc.hpp"

using namespace tokfuzz;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* name) {
  fs::path p = fs::temp_directory_path() / "tokfuzz_engine_tests" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << text;
}

fs::path make_seeds(const char* name) {
  fs::path seeds = fresh_dir(name);
  write_file(seeds / "a.js", "let alpha = 1; print(alpha + 2);");
  write_file(seeds / "b.js",
             "function f(x) { return x * 2; } print(f(4));");
  write_file(seeds / "c.js",
             "let arr = new Array(); arr.push(1); print(arr.length);");
  return seeds;
}

EngineConfig make_config(const fs::path& corpus) {
  EngineConfig cfg;
  cfg.corpus_dir = corpus;
  cfg.target.target_path = MINIJS_BIN;
  cfg.quiet = true;
  return cfg;
}

std::vector<std::string> stats_rows(const fs::path& corpus) {
  std::ifstream f(corpus_layout::stats_file(corpus));
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(f, line))
    if (!line.empty()) rows.push_back(line);
  return rows;
}

// Columns after the timestamp, so deterministic reruns compare equal.
std::string row_tail(const std::string& row) {
  return row.substr(row.find(','));
}

}  // namespace

TEST_CASE("zero limits run the dry pass and stop") {
  fs::path corpus = fresh_dir("dry_corpus");
  preprocess_corpus(make_seeds("dry_seeds"), corpus, 3);
  Engine engine(make_config(corpus));
  RunOutcome outcome = engine.run({0, 0});
  CHECK(outcome == RunOutcome::ok);

  const CampaignStats& s = engine.stats();
  CHECK(s.total_execs == 3);
  CHECK(s.dry_run_execs == 3);
  CHECK(s.parse_ok_count == 3);
  CHECK(s.conserved());
  CHECK(s.edges_seen > 0);
  CHECK(s.edges_seen == s.dry_run_edges);
  CHECK(s.crash_count == 0);

  CHECK(engine.corpus().size() == 3);
  CHECK(engine.favored_count() >= 1);
  for (const CorpusEntry& e : engine.corpus()) {
    CHECK(e.exec_cost > 0);
    CHECK(e.token_len == e.input.size());
    CHECK_FALSE(e.edges.empty());
  }

  auto rows = stats_rows(corpus);
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0] ==
        "unix_millis,total_execs,parse_ok,parse_error,crashes,unique_crashes,"
        "edges_seen");
  CHECK(rows.back().find(",3,3,0,0,0,") != std::string::npos);
  // The dry run adds no queue entries beyond the seeds.
  CHECK(list_queue_files(corpus, "tok").size() == 3);
}

TEST_CASE("identical seeds and budgets reproduce a campaign exactly") {
  fs::path seeds = make_seeds("det_seeds");
  fs::path c1 = fresh_dir("det_corpus1");
  fs::path c2 = fresh_dir("det_corpus2");
  preprocess_corpus(seeds, c1, 5);
  preprocess_corpus(seeds, c2, 5);

  EngineConfig cfg1 = make_config(c1);
  cfg1.rng_seed = 42;
  Engine e1(cfg1);
  RunOutcome o1 = e1.run({2000, 0});

  EngineConfig cfg2 = make_config(c2);
  cfg2.rng_seed = 42;
  Engine e2(cfg2);
  RunOutcome o2 = e2.run({2000, 0});

  CHECK(o1 == o2);
  const CampaignStats &s1 = e1.stats(), &s2 = e2.stats();
  CHECK(s1.total_execs == s2.total_execs);
  CHECK(s1.total_execs >= 2000);
  CHECK(s1.parse_ok_count == s2.parse_ok_count);
  CHECK(s1.parse_error_count == s2.parse_error_count);
  CHECK(s1.runtime_error_count == s2.runtime_error_count);
  CHECK(s1.crash_count == s2.crash_count);
  CHECK(s1.edges_seen == s2.edges_seen);
  CHECK(s1.conserved());

  auto q1 = list_queue_files(c1, "tok");
  auto q2 = list_queue_files(c2, "tok");
  REQUIRE(q1.size() == q2.size());
  CHECK(q1.size() > 3);  // the campaign discovered something
  for (size_t i = 0; i < q1.size(); i++) {
    CHECK(q1[i].filename() == q2[i].filename());
    CHECK(read_tok_file(q1[i]) == read_tok_file(q2[i]));
  }
  auto r1 = stats_rows(c1);
  auto r2 = stats_rows(c2);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 1; i < r1.size(); i++)
    CHECK(row_tail(r1[i]) == row_tail(r2[i]));

  // A different rng seed takes a different trajectory.
  fs::path c3 = fresh_dir("det_corpus3");
  preprocess_corpus(seeds, c3, 5);
  EngineConfig cfg3 = make_config(c3);
  cfg3.rng_seed = 43;
  Engine e3(cfg3);
  e3.run({2000, 0});
  auto q3 = list_queue_files(c3, "tok");
  bool diverged = e3.stats().parse_ok_count != s1.parse_ok_count ||
                  e3.stats().edges_seen != s1.edges_seen ||
                  q3.size() != q1.size();
  CHECK(diverged);
}

TEST_CASE("the walk turns a near-witness seed into a crash find") {
  // One substitution away from the trailing-number pattern; the
  // deterministic walk tries every code at every position.
  fs::path seeds = fresh_dir("bait_seeds");
  write_file(seeds / "bait.js", "print ( 1 ) ; 4 ;");
  fs::path corpus = fresh_dir("bait_corpus");
  preprocess_corpus(seeds, corpus, 3);

  Engine engine(make_config(corpus));
  RunOutcome outcome = engine.run({400, 0});
  CHECK(outcome == RunOutcome::crashes_found);
  CHECK(engine.stats().crash_count > 0);
  CHECK(engine.stats().unique_crash_count == 1);
  CHECK(fs::exists(corpus_layout::crashes_dir(corpus) / "3" / "report.txt"));
  std::string report =
      read_bytes_file(corpus_layout::crashes_dir(corpus) / "3" / "report.txt");
  CHECK(report.find("signature: assertion 3") != std::string::npos);
  CHECK(report.find("minimized:") != std::string::npos);
}

TEST_CASE("campaign modes are sticky per corpus directory") {
  fs::path corpus = fresh_dir("mode_corpus");
  preprocess_corpus(make_seeds("mode_seeds"), corpus, 3);
  Engine token_engine(make_config(corpus));
  CHECK(token_engine.run({100, 0}) == RunOutcome::ok);
  CHECK(read_bytes_file(corpus_layout::mode_file(corpus)).find("token") == 0);

  EngineConfig byte_cfg = make_config(corpus);
  byte_cfg.mode = FuzzMode::byte;
  Engine byte_engine(byte_cfg);
  CHECK_THROWS_AS(byte_engine.run({100, 0}), CorpusFailure);
}

TEST_CASE("byte mode campaigns account and persist like token mode") {
  fs::path corpus = fresh_dir("byte_corpus");
  preprocess_corpus(make_seeds("byte_seeds"), corpus, 3);
  EngineConfig cfg = make_config(corpus);
  cfg.mode = FuzzMode::byte;
  Engine engine(cfg);
  RunOutcome outcome = engine.run({500, 0});
  CHECK(outcome != RunOutcome::target_failure);
  const CampaignStats& s = engine.stats();
  CHECK(s.total_execs >= 500);
  CHECK(s.conserved());
  CHECK(read_bytes_file(corpus_layout::mode_file(corpus)).find("byte") == 0);
  // Discovered entries are stored as raw bytes next to the seed .tok files.
  CHECK(list_queue_files(corpus, "tok").size() == 3);
  CHECK(engine.corpus().size() ==
        3 + list_queue_files(corpus, "raw").size());
}

TEST_CASE("a target that cannot spawn aborts the campaign") {
  fs::path corpus = fresh_dir("nospawn_corpus");
  preprocess_corpus(make_seeds("nospawn_seeds"), corpus, 3);
  EngineConfig cfg = make_config(corpus);
  cfg.target.target_path = "/nonexistent/minijs";
  Engine engine(cfg);
  CHECK(engine.run({100, 0}) == RunOutcome::target_failure);
}

TEST_CASE("a corpus directory without seeds fails the campaign") {
  fs::path corpus = fresh_dir("empty_corpus");
  fs::create_directories(corpus_layout::queue_dir(corpus));
  TokenMap map;
  map.add(make_token(TokenKind::punctuator, ";"));
  map.save(corpus_layout::tokenmap_file(corpus));
  Engine engine(make_config(corpus));
  CHECK_THROWS_AS(engine.run({100, 0}), CorpusFailure);
}

TEST_CASE("two workers share one campaign without losing executions") {
  fs::path corpus = fresh_dir("mt_corpus");
  preprocess_corpus(make_seeds("mt_seeds"), corpus, 7);
  EngineConfig cfg = make_config(corpus);
  cfg.workers = 2;
  Engine engine(cfg);
  RunOutcome outcome = engine.run({3000, 0});
  CHECK(outcome != RunOutcome::target_failure);
  const CampaignStats& s = engine.stats();
  CHECK(s.total_execs >= 3000);
  CHECK(s.conserved());
  CHECK(s.edges_seen > 0);
}
