#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tokfuzz/coverage.hpp"
#include "tokfuzz/executor.hpp"
#include "tokfuzz/lexer.hpp"

using namespace tokfuzz;

namespace {

TargetConfig target_config() {
  TargetConfig cfg;
  cfg.target_path = MINIJS_BIN;
  return cfg;
}

std::span<const uint8_t> trace_of(const ExecResult& r) {
  return {r.trace, r.trace_size};
}

}  // namespace

TEST_CASE("statuses and assertion ids arrive over the wire") {
  Executor ex(target_config(), kCoverageMapSize);

  ExecResult ok = ex.run_text("print(1);");
  CHECK(ok.status == ExecStatus::parse_ok);
  CHECK(ok.assertion_id == 0);
  CHECK(ok.exec_cost > 0);
  REQUIRE(ok.trace != nullptr);
  CHECK(ok.trace_size == kCoverageMapSize);
  CHECK_FALSE(trace_edges(trace_of(ok)).empty());

  CHECK(ex.run_text("let ;").status == ExecStatus::parse_error);
  CHECK(ex.run_text("missing();").status == ExecStatus::runtime_error);

  ExecResult crash = ex.run_text("print ( 1 ) 4 7 ;");
  CHECK(crash.status == ExecStatus::crash);
  CHECK(crash.assertion_id == 3);
}

TEST_CASE("execution cost and trace are deterministic per program") {
  Executor ex(target_config(), kCoverageMapSize);
  ExecResult a = ex.run_text("let v = 0; while (v < 9) { v++; } print(v);");
  uint64_t cost = a.exec_cost;
  uint64_t sig = trace_signature(trace_of(a));
  for (int i = 0; i < 5; i++) {
    ExecResult b = ex.run_text("let v = 0; while (v < 9) { v++; } print(v);");
    CHECK(b.exec_cost == cost);
    CHECK(trace_signature(trace_of(b)) == sig);
  }
  ExecResult c = ex.run_text("let v = 0; while (v < 20) { v++; } print(v);");
  CHECK(c.exec_cost > cost);  // more work, more charge
}

TEST_CASE("crashes respawn the target transparently") {
  Executor ex(target_config(), kCoverageMapSize);
  CHECK(ex.respawns() == 0);
  CHECK(ex.run_text("print ( 1 ) 4 7 ;").status == ExecStatus::crash);
  CHECK(ex.run_text("print(2);").status == ExecStatus::parse_ok);
  CHECK(ex.respawns() == 1);
  for (int i = 0; i < 3; i++)
    CHECK(ex.run_text("function f() { const a = 1; const a = 2; } f();")
              .status == ExecStatus::crash);
  CHECK(ex.run_text("print(3);").status == ExecStatus::parse_ok);
  CHECK(ex.respawns() == 4);
}

TEST_CASE("a persistent process matches fresh-process execution") {
  const char* programs[] = {
      "print(1);",
      "let ;",
      "print ( 1 ) 4 7 ;",
      "missing();",
      "let a = [1, 2]; print(a.pop());",
      "function f() { let o = { k = 5 } ; } f();",
      "print('x' + 'y');",
  };
  Executor persistent(target_config(), kCoverageMapSize);
  for (const char* p : programs) {
    CAPTURE(p);
    ExecResult warm = persistent.run_text(p);
    Executor fresh(target_config(), kCoverageMapSize);
    ExecResult cold = fresh.run_text(p);
    CHECK(warm.status == cold.status);
    CHECK(warm.assertion_id == cold.assertion_id);
    CHECK(warm.exec_cost == cold.exec_cost);
    CHECK(trace_signature(trace_of(warm)) == trace_signature(trace_of(cold)));
  }
}

TEST_CASE("state does not leak between executions") {
  Executor ex(target_config(), kCoverageMapSize);
  CHECK(ex.run_text("let g = 41; print(g);").status == ExecStatus::parse_ok);
  // If the first program's globals survived, this would print instead of
  // failing to resolve.
  CHECK(ex.run_text("print(g);").status == ExecStatus::runtime_error);
}

TEST_CASE("wall-clock overruns come back as timeouts") {
  TargetConfig cfg = target_config();
  cfg.timeout_ms = 60;
  Executor ex(cfg, kCoverageMapSize);
  // Few steps, heavy per-step work: each unshift memmoves half a million
  // elements.
  ExecResult r = ex.run_text(
      "let a = new Array(); a.length = 500000; let i = 0;"
      " while (i < 5000) { a.unshift(1); i++; }");
  CHECK(r.status == ExecStatus::timeout);
  // The killed child is replaced lazily, on the next run.
  CHECK(ex.respawns() == 0);
  CHECK(ex.run_text("print(1);").status == ExecStatus::parse_ok);
  CHECK(ex.respawns() == 1);
}

TEST_CASE("run_input decodes through the shared map") {
  Executor ex(target_config(), kCoverageMapSize);
  TokenMap map;
  for (const Token& t : lex("print ( 7 ) ; let var1 = 'q' ;")) map.add(t);
  EncodedInput codes = encode(lex("let var1 = 7 ; print ( var1 ) ;"), map);
  ExecResult via_codes = ex.run_input(codes, map);
  ExecResult via_text = ex.run_text(decode(codes, map));
  CHECK(via_codes.status == ExecStatus::parse_ok);
  CHECK(via_codes.exec_cost == via_text.exec_cost);
  CHECK(trace_signature(trace_of(via_codes)) ==
        trace_signature(trace_of(via_text)));
}

TEST_CASE("a missing target binary fails to spawn") {
  TargetConfig cfg;
  cfg.target_path = "/nonexistent/minijs";
  CHECK_THROWS_AS(Executor(cfg, kCoverageMapSize), SpawnFailure);
}

TEST_CASE("a non-protocol binary fails the handshake") {
  TargetConfig cfg;
  cfg.target_path = "/bin/echo";
  cfg.args = {};
  CHECK_THROWS_AS(Executor(cfg, kCoverageMapSize), SpawnFailure);
}

TEST_CASE("an announced map size mismatch is rejected") {
  CHECK_THROWS_AS(Executor(target_config(), 1024), HandshakeMismatch);
}
