#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "tokfuzz/corpus_io.hpp"
#include "tokfuzz/lexer.hpp"
#include "tokfuzz/preproc.hpp"

using namespace tokfuzz;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* name) {
  fs::path p = fs::temp_directory_path() / "tokfuzz_preproc_tests" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << text;
}

std::string slurp(const fs::path& p) { return read_bytes_file(p); }

}  // namespace

TEST_CASE("variable pool is var1 through var15") {
  const auto& pool = variable_pool();
  REQUIRE(pool.size() == 15);
  CHECK(pool.front() == "var1");
  CHECK(pool.back() == "var15");
}

TEST_CASE("builtins are exempt from renaming") {
  for (const char* b :
       {"print", "length", "push", "pop", "shift", "unshift", "Array",
        "String"}) {
    CAPTURE(b);
    CHECK(is_builtin(b));
  }
  CHECK(builtin_names().size() == 8);
  CHECK_FALSE(is_builtin("let"));
  CHECK_FALSE(is_builtin("x"));
}

TEST_CASE("rename maps each identifier consistently and skips builtins") {
  Rng rng(5);
  std::vector<RenameEvent> log;
  TokenSeq in = lex("let alpha = beta; print(alpha); alpha = alpha + beta;");
  TokenSeq out = rename_variables(in, rng, &log);
  REQUIRE(out.size() == in.size());
  REQUIRE(log.size() == 2);
  CHECK(log[0].from == "alpha");
  CHECK(log[1].from == "beta");
  const std::string& a = log[0].to;
  const std::string& b = log[1].to;
  CHECK(a != b);
  CHECK(out[1].text == a);
  CHECK(out[3].text == b);
  CHECK(out[5].text == "print");  // builtin untouched
  CHECK(out[7].text == a);
  int count_a = 0;
  for (const Token& t : out)
    if (t.kind == TokenKind::identifier && t.text == a) count_a++;
  CHECK(count_a == 4);
}

TEST_CASE("rename draws pool names without replacement until exhaustion") {
  std::string src;
  for (int i = 0; i < 16; i++) src += "n" + std::to_string(i) + "; ";
  Rng rng(11);
  std::vector<RenameEvent> log;
  TokenSeq out = rename_variables(lex(src), rng, &log);
  REQUIRE(log.size() == 16);
  std::set<std::string> first15;
  for (size_t i = 0; i < 15; i++) first15.insert(log[i].to);
  CHECK(first15.size() == 15);  // a full pool pass before any repeat
  const auto& pool = variable_pool();
  for (const auto& ev : log) {
    CAPTURE(ev.from);
    CHECK(std::find(pool.begin(), pool.end(), ev.to) != pool.end());
  }
  CHECK(out.size() == 32);
}

TEST_CASE("rename also remaps identifiers that already use pool names") {
  Rng rng(3);
  std::vector<RenameEvent> log;
  rename_variables(lex("var7 = other;"), rng, &log);
  REQUIRE(log.size() == 2);
  CHECK(log[0].from == "var7");
}

TEST_CASE("rename is deterministic for a fixed rng seed") {
  TokenSeq in = lex("a; b; c; d; e; f; g;");
  Rng r1(42), r2(42), r3(43);
  CHECK(rename_variables(in, r1) == rename_variables(in, r2));
  // A different stream is allowed to coincide but these seeds do not.
  CHECK(rename_variables(in, r3) != rename_variables(in, r2));
}

TEST_CASE("renumber snaps literals to the canonical pool and logs changes") {
  std::vector<RenumberEvent> log;
  TokenSeq out = renumber(lex("x = 41; y = 64; z = 1.9;"), &log);
  CHECK(out[2].text == "33");
  CHECK(out[6].text == "64");
  CHECK(out[10].text == "1");
  REQUIRE(log.size() == 2);  // exact members go unlogged
  CHECK(log[0].from == "41");
  CHECK(log[0].to == "33");
  CHECK(log[1].from == "1.9");
  CHECK(log[1].to == "1");
}

TEST_CASE("renumber leaves non-number tokens alone") {
  TokenSeq in = lex("let s = 'text 999'; s.length;");
  TokenSeq out = renumber(in);
  CHECK(out == in);
}

TEST_CASE("build_token_map unions seeds in order then appends extras") {
  std::vector<TokenSeq> seeds = {lex("let a = 1 ;"), lex("a = 2 ;")};
  std::vector<Token> extra = {make_token(TokenKind::keyword, "while"),
                              make_token(TokenKind::punctuator, ";")};
  TokenMap m = build_token_map(seeds, extra);
  // let a = 1 ; 2 while  -> 7 entries, extras deduped against seeds
  CHECK(m.size() == 7);
  CHECK(m.code_of(make_token(TokenKind::keyword, "let")) == 0);
  CHECK(m.code_of(make_token(TokenKind::number_literal, "2")) == 5);
  CHECK(m.code_of(make_token(TokenKind::keyword, "while")) == 6);
}

TEST_CASE("extra tokens file takes one token per line") {
  fs::path dir = fresh_dir("extra");
  fs::path file = dir / "extra.txt";
  write_file(file, "while\n\n=>\n'str'\n@\n9\n");
  std::vector<Token> extra = parse_extra_tokens_file(file);
  REQUIRE(extra.size() == 5);
  CHECK(extra[0] == make_token(TokenKind::keyword, "while"));
  CHECK(extra[1] == make_token(TokenKind::punctuator, "=>"));
  CHECK(extra[2].kind == TokenKind::string_literal);
  CHECK(extra[3] == make_token(TokenKind::punctuator, "@"));
  CHECK(extra[4] == make_token(TokenKind::number_literal, "9"));

  write_file(file, "let a\n");
  CHECK_THROWS_AS(parse_extra_tokens_file(file), Error);
  CHECK_THROWS_AS(parse_extra_tokens_file(dir / "missing.txt"), Error);
}

TEST_CASE("preprocess_corpus writes map queue and report") {
  fs::path seeds = fresh_dir("seeds_ok");
  fs::path corpus = fresh_dir("corpus_ok");
  write_file(seeds / "b.js", "let total = 41; print(total);");
  write_file(seeds / "a.js", "let count = 3;");
  CorpusBuildResult res = preprocess_corpus(seeds, corpus, 9);
  CHECK(res.seeds_seen == 2);
  CHECK(res.seeds_kept == 2);
  REQUIRE(res.records.size() == 2);
  CHECK(res.records[0].name == "a.js");  // sorted by file name
  CHECK(res.records[1].name == "b.js");
  CHECK(res.records[1].renumbers.size() == 1);
  CHECK(res.records[1].renumbers[0].to == "33");

  REQUIRE(fs::exists(corpus_layout::tokenmap_file(corpus)));
  auto files = list_queue_files(corpus, "tok");
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "id_000000.tok");

  TokenMap map = TokenMap::load(corpus_layout::tokenmap_file(corpus));
  CHECK(map == res.map);
  EncodedInput codes = read_tok_file(files[1]);
  std::string text = decode(codes, map);
  CHECK(text.find("33") != std::string::npos);
  CHECK(text.find("total") == std::string::npos);  // renamed away
  CHECK(text.find("print") != std::string::npos);

  std::string report = slurp(corpus_layout::seeds_report_file(corpus));
  CHECK(report.find("seeds 2 kept 2") == 0);
  CHECK(report.find("rename total -> ") != std::string::npos);
  CHECK(report.find("renumber 41 -> 33") != std::string::npos);
}

TEST_CASE("preprocess_corpus skips unlexable seeds and reports the reason") {
  fs::path seeds = fresh_dir("seeds_skip");
  fs::path corpus = fresh_dir("corpus_skip");
  write_file(seeds / "good.js", "let a = 1;");
  write_file(seeds / "bad.js", "let a @ 1;");
  CorpusBuildResult res = preprocess_corpus(seeds, corpus, 9);
  CHECK(res.seeds_seen == 2);
  CHECK(res.seeds_kept == 1);
  CHECK_FALSE(res.records[0].kept);
  CHECK(res.records[0].skip_reason.find("illegal character") !=
        std::string::npos);
  CHECK(list_queue_files(corpus, "tok").size() == 1);
  std::string report = slurp(corpus_layout::seeds_report_file(corpus));
  CHECK(report.find("seed bad.js SKIPPED") != std::string::npos);
}

TEST_CASE("preprocess_corpus fails when nothing survives") {
  fs::path seeds = fresh_dir("seeds_none");
  fs::path corpus = fresh_dir("corpus_none");
  write_file(seeds / "bad.js", "@@@");
  CHECK_THROWS_AS(preprocess_corpus(seeds, corpus, 9), CorpusFailure);
  CHECK_THROWS_AS(preprocess_corpus(fresh_dir("seeds_empty"),
                                    fresh_dir("corpus_empty"), 9),
                  CorpusFailure);
  CHECK_THROWS_AS(
      preprocess_corpus(seeds / "nodir", fresh_dir("corpus_nodir"), 9),
      CorpusFailure);
}

TEST_CASE("preprocess_corpus reruns produce identical bytes") {
  fs::path seeds = fresh_dir("seeds_det");
  write_file(seeds / "a.js", "let first = 10; let second = first + 90;");
  write_file(seeds / "b.js", "function f(p) { return p; } f(5);");
  fs::path c1 = fresh_dir("corpus_det1");
  fs::path c2 = fresh_dir("corpus_det2");
  preprocess_corpus(seeds, c1, 31);
  preprocess_corpus(seeds, c2, 31);
  for (const char* rel : {"tokenmap.txt", "seeds_report.txt"})
    CHECK(slurp(c1 / rel) == slurp(c2 / rel));
  auto q1 = list_queue_files(c1, "tok");
  auto q2 = list_queue_files(c2, "tok");
  REQUIRE(q1.size() == q2.size());
  for (size_t i = 0; i < q1.size(); i++)
    CHECK(slurp(q1[i]) == slurp(q2[i]));

  // A different rng seed changes name assignment but not structure.
  fs::path c3 = fresh_dir("corpus_det3");
  CorpusBuildResult res3 = preprocess_corpus(seeds, c3, 32);
  CHECK(res3.seeds_kept == 2);
}

TEST_CASE("preprocessed seeds hit the encode decode lex fixed point") {
  fs::path seeds = fresh_dir("seeds_fp");
  write_file(seeds / "a.js",
             "let acc = 0; for (let i = 0; i < 9; i++) { acc = acc + i; } "
             "print(acc);");
  fs::path corpus = fresh_dir("corpus_fp");
  CorpusBuildResult res = preprocess_corpus(seeds, corpus, 4);
  EncodedInput codes = read_tok_file(list_queue_files(corpus, "tok")[0]);
  TokenSeq decoded = lex(decode(codes, res.map));
  CHECK(encode(decoded, res.map) == codes);
}
