#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "tokfuzz/corpus_io.hpp"

using namespace tokfuzz;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / "tokfuzz_cli_tests";
  fs::create_directories(p);
  return p;
}

fs::path fresh_dir(const char* name) {
  fs::path p = scratch() / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::string s((std::istreambuf_iterator<char>(f)),
                std::istreambuf_iterator<char>());
  return s;
}

CmdResult run_cmd(const std::string& args) {
  fs::path out = scratch() / "stdout.txt";
  fs::path err = scratch() / "stderr.txt";
  std::string cmd = std::string(TOKFUZZ_BIN) + " " + args + " >" +
                    out.string() + " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, slurp(out), slurp(err)};
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << text;
}

// Seed one substitution away from the trailing-number crash, so a short
// campaign finds it deterministically.
fs::path bait_corpus(const char* name) {
  fs::path seeds = fresh_dir((std::string(name) + "_seeds").c_str());
  write_file(seeds / "bait.js", "print ( 1 ) ; 4 ;");
  fs::path corpus = fresh_dir(name);
  CmdResult r = run_cmd("preprocess --seeds " + seeds.string() + " --corpus " +
                        corpus.string());
  REQUIRE(r.exit_code == 0);
  return corpus;
}

}  // namespace

TEST_CASE("preprocess reports seed and token counts") {
  fs::path corpus = fresh_dir("pre_corpus");
  CmdResult r = run_cmd(std::string("preprocess --seeds ") + SEEDS_DIR +
                        " --corpus " + corpus.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(" seeds (0 skipped), ") != std::string::npos);
  CHECK(r.out.find(" tokens") != std::string::npos);
  CHECK(fs::exists(corpus_layout::tokenmap_file(corpus)));
  CHECK(fs::exists(corpus_layout::seeds_report_file(corpus)));
  CHECK(list_queue_files(corpus, "tok").size() == 100);
}

TEST_CASE("preprocess reruns are byte identical") {
  fs::path c1 = fresh_dir("pre_det1");
  fs::path c2 = fresh_dir("pre_det2");
  std::string base = std::string("preprocess --seeds ") + SEEDS_DIR +
                     " --rng-seed 9 --corpus ";
  REQUIRE(run_cmd(base + c1.string()).exit_code == 0);
  REQUIRE(run_cmd(base + c2.string()).exit_code == 0);
  CHECK(slurp(corpus_layout::tokenmap_file(c1)) ==
        slurp(corpus_layout::tokenmap_file(c2)));
  CHECK(slurp(corpus_layout::seeds_report_file(c1)) ==
        slurp(corpus_layout::seeds_report_file(c2)));
  auto q1 = list_queue_files(c1, "tok");
  auto q2 = list_queue_files(c2, "tok");
  REQUIRE(q1.size() == q2.size());
  for (size_t i = 0; i < q1.size(); i++)
    CHECK(slurp(q1[i]) == slurp(q2[i]));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cmd("").exit_code == 2);
  CHECK(run_cmd("preprocess").exit_code == 2);  // missing required options
  fs::path corpus = fresh_dir("usage_corpus");
  CHECK(run_cmd("fuzz --corpus " + corpus.string()).exit_code == 2);
  CHECK(run_cmd("fuzz --corpus " + corpus.string() + " --target " +
                MINIJS_BIN + " --mode sideways")
            .exit_code == 2);
  CHECK(run_cmd("frobnicate").exit_code == 2);
}

TEST_CASE("a clean campaign exits 0 and a crash-finding one exits 1") {
  fs::path quiet_seeds = fresh_dir("quiet_seeds");
  write_file(quiet_seeds / "a.js", "print(1 + 2);");
  fs::path quiet_corpus = fresh_dir("quiet_corpus");
  REQUIRE(run_cmd("preprocess --seeds " + quiet_seeds.string() +
                  " --corpus " + quiet_corpus.string())
              .exit_code == 0);
  CmdResult clean = run_cmd("fuzz --corpus " + quiet_corpus.string() +
                            " --target " + MINIJS_BIN +
                            " --max-execs 60 --quiet");
  CHECK(clean.exit_code == 0);
  CHECK(clean.err.find("done:") != std::string::npos);
  CHECK(clean.err.find("0 unique bugs") != std::string::npos);

  fs::path corpus = bait_corpus("crashy_corpus");
  CmdResult crashy = run_cmd("fuzz --corpus " + corpus.string() +
                             " --target " + MINIJS_BIN +
                             " --max-execs 400 --quiet");
  CHECK(crashy.exit_code == 1);
  CHECK(crashy.err.find("1 unique bugs") != std::string::npos);
  CHECK(fs::exists(corpus_layout::crashes_dir(corpus) / "3"));
}

TEST_CASE("an unspawnable target exits 3") {
  fs::path corpus = bait_corpus("nospawn_corpus");
  CmdResult r = run_cmd("fuzz --corpus " + corpus.string() +
                        " --target /nonexistent/minijs --max-execs 50 --quiet");
  CHECK(r.exit_code == 3);
}

TEST_CASE("replay decodes token files and reports wire status") {
  fs::path corpus = bait_corpus("replay_corpus");
  CmdResult ok = run_cmd("replay --corpus " + corpus.string() + " --target " +
                         MINIJS_BIN + " " +
                         (corpus_layout::queue_dir(corpus) / "id_000000.tok")
                             .string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("print ( 1 ) ; 4 ;") != std::string::npos);
  CHECK(ok.out.find("status: parse_ok") != std::string::npos);

  REQUIRE(run_cmd("fuzz --corpus " + corpus.string() + " --target " +
                  MINIJS_BIN + " --max-execs 400 --quiet")
              .exit_code == 1);
  fs::path witness = corpus_layout::crashes_dir(corpus) / "3" / "id_0000.tok";
  REQUIRE(fs::exists(witness));
  CmdResult crash = run_cmd("replay --corpus " + corpus.string() +
                            " --target " + MINIJS_BIN + " " +
                            witness.string());
  CHECK(crash.exit_code == 0);
  CHECK(crash.out.find("status: crash assertion=3") != std::string::npos);

  fs::path raw = scratch() / "prog.js";
  write_file(raw, "missing();");
  CmdResult rt = run_cmd("replay --corpus " + corpus.string() + " --target " +
                         MINIJS_BIN + " " + raw.string());
  CHECK(rt.exit_code == 0);
  CHECK(rt.out.find("status: runtime_error") != std::string::npos);
}

TEST_CASE("report summarizes a finished campaign") {
  fs::path corpus = bait_corpus("report_corpus");
  REQUIRE(run_cmd("fuzz --corpus " + corpus.string() + " --target " +
                  MINIJS_BIN + " --max-execs 400 --quiet")
              .exit_code == 1);
  CmdResult r = run_cmd("report " + corpus.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mode") != std::string::npos);
  CHECK(r.out.find("parse_ok") != std::string::npos);
  CHECK(r.out.find("edges seen") != std::string::npos);
  CHECK(r.out.find("assertion 3") != std::string::npos);
}

TEST_CASE("report compares parse rates across two corpora") {
  fs::path a = bait_corpus("cmp_a");
  fs::path b = bait_corpus("cmp_b");
  for (const fs::path& c : {a, b})
    REQUIRE(run_cmd("fuzz --corpus " + c.string() + " --target " +
                    MINIJS_BIN + " --max-execs 200 --quiet")
                .exit_code != 2);
  CmdResult r = run_cmd("report " + a.string() + " " + b.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("parse-rate ratio") != std::string::npos);
}
