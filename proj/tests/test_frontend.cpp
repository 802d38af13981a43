#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>

#include "tokfuzz/codec.hpp"
#include "tokfuzz/lexer.hpp"
#include "tokfuzz/numbers.hpp"
#include "tokfuzz/rng.hpp"
#include "tokfuzz/token_map.hpp"

using namespace tokfuzz;

namespace {

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / "tokfuzz_frontend_tests";
  std::filesystem::create_directories(p);
  return p / name;
}

}  // namespace

TEST_CASE("lexer splits identifiers keywords numbers and punctuators") {
  TokenSeq t = lex("let x1 = 41; print(x1);");
  REQUIRE(t.size() == 10);
  CHECK(t[0] == make_token(TokenKind::keyword, "let"));
  CHECK(t[1] == make_token(TokenKind::identifier, "x1"));
  CHECK(t[2] == make_token(TokenKind::punctuator, "="));
  CHECK(t[3] == make_token(TokenKind::number_literal, "41"));
  CHECK(t[4] == make_token(TokenKind::punctuator, ";"));
  CHECK(t[5] == make_token(TokenKind::identifier, "print"));
  CHECK(t[9] == make_token(TokenKind::punctuator, ";"));
}

TEST_CASE("maximal munch prefers the longest punctuator") {
  CHECK(lex("===").size() == 1);
  CHECK(lex("== =").size() == 2);
  CHECK(lex("====")[0].text == "===");
  CHECK(lex("====")[1].text == "=");
  TokenSeq t = lex("a+++b");
  REQUIRE(t.size() == 4);
  CHECK(t[1].text == "++");
  CHECK(t[2].text == "+");
  CHECK(lex("<=>")[0].text == "<=");
  CHECK(lex("x=>y")[1].text == "=>");
}

TEST_CASE("number fraction needs a digit after the dot") {
  TokenSeq t = lex("1.5");
  REQUIRE(t.size() == 1);
  CHECK(t[0].text == "1.5");
  t = lex("1.");
  REQUIRE(t.size() == 2);
  CHECK(t[0].text == "1");
  CHECK(t[1].text == ".");
  t = lex("1.2.3");
  REQUIRE(t.size() == 3);
  CHECK(t[0].text == "1.2");
  CHECK(t[1].text == ".");
  CHECK(t[2].text == "3");
}

TEST_CASE("string literals keep quotes and escapes in the token text") {
  TokenSeq t = lex("'a\\'b' \"x\"");
  REQUIRE(t.size() == 2);
  CHECK(t[0].kind == TokenKind::string_literal);
  CHECK(t[0].text == "'a\\'b'");
  CHECK(t[1].text == "\"x\"");
}

TEST_CASE("comments and whitespace vanish from the token stream") {
  TokenSeq t = lex("let a; // trailing\n/* block\n */ let b;");
  REQUIRE(t.size() == 6);
  CHECK(t[3].text == "let");
}

TEST_CASE("strict lex throws and total lex recovers a prefix") {
  CHECK_THROWS_AS(lex("let a @ b"), LexError);
  LexOutcome out = lex_total("let a @ b");
  CHECK_FALSE(out.ok);
  CHECK(out.tokens.size() == 2);
  CHECK(out.error_pos == 6);

  out = lex_total("'open");
  CHECK_FALSE(out.ok);
  out = lex_total("/* open");
  CHECK_FALSE(out.ok);
  out = lex_total("\"line\nbreak\"");
  CHECK_FALSE(out.ok);
}

TEST_CASE("all sixteen keywords are recognized") {
  const char* kws[] = {"let", "const", "var",  "function", "return", "if",
                       "else", "while", "for",  "true",     "false",  "null",
                       "new", "class", "delete", "typeof"};
  for (const char* k : kws) {
    CAPTURE(k);
    CHECK(is_keyword(k));
    CHECK(lex(k)[0].kind == TokenKind::keyword);
  }
  CHECK_FALSE(is_keyword("print"));
  CHECK_FALSE(is_keyword("undefined"));
}

TEST_CASE("render then lex is the identity on lexed sequences") {
  const char* sources[] = {
      "let a = 1; a++; a += 2;"
      " if (a >= 3 && a != 5) { print('hi'); } else { print(\"bye\"); }",
      "function f(x, y) { return x * y % 7; } f(2, 3);",
      "let o = { a: 1, b: 'two' }; o.a = o['b']; delete o.b; typeof o;",
      "for (let i = 0; i < 4; i++) { i === 2 ? print(i) : 0; }",
      "class C { } let c = new C(); c.v = 1.25; -c.v; !true; a || b;",
      "while (false) { } [1, 2][0]; 'quo\\'te'; x => 0;",
  };
  for (const char* s : sources) {
    CAPTURE(s);
    TokenSeq once = lex(s);
    TokenSeq twice = lex(render(once));
    CHECK(once == twice);
  }
}

TEST_CASE("render separates normal tokens with single spaces") {
  CHECK(render(lex("let a=1;")) == "let a = 1 ;");
  CHECK(render(TokenSeq{}) == "");
}

TEST_CASE("kind names round trip") {
  for (TokenKind k : {TokenKind::keyword, TokenKind::punctuator,
                      TokenKind::identifier, TokenKind::number_literal,
                      TokenKind::string_literal}) {
    TokenKind back{};
    REQUIRE(kind_from_name(kind_name(k), back));
    CHECK(back == k);
  }
  TokenKind unused{};
  CHECK_FALSE(kind_from_name("widget", unused));
}

TEST_CASE("canonical pool has 96 sorted members spanning 0 to 2^32+1") {
  const auto& pool = canonical_pool();
  REQUIRE(pool.size() == 96);
  CHECK(std::is_sorted(pool.begin(), pool.end()));
  CHECK(std::adjacent_find(pool.begin(), pool.end()) == pool.end());
  CHECK(pool.front() == 0);
  CHECK(pool.back() == (1ull << 32) + 1);
  std::set<uint64_t> expect;
  for (int k = 0; k <= 32; k++) {
    uint64_t p = 1ull << k;
    expect.insert(p - 1);
    expect.insert(p);
    expect.insert(p + 1);
  }
  CHECK(std::set<uint64_t>(pool.begin(), pool.end()) == expect);
}

TEST_CASE("nearest_canonical matches a linear scan on 10k random values") {
  const auto& pool = canonical_pool();
  auto oracle = [&](uint64_t n) {
    uint64_t best = pool[0];
    uint64_t best_d = n > best ? n - best : best - n;
    for (uint64_t p : pool) {
      uint64_t d = n > p ? n - p : p - n;
      if (d < best_d || (d == best_d && p < best)) {
        best = p;
        best_d = d;
      }
    }
    return best;
  };
  Rng rng(0xfeedbeef);
  for (int i = 0; i < 10000; i++) {
    uint64_t n = rng.below((1ull << 33) + 1);
    CAPTURE(n);
    REQUIRE(nearest_canonical(n) == oracle(n));
  }
}

TEST_CASE("nearest_canonical resolves midpoint ties to the smaller member") {
  CHECK(nearest_canonical(6) == 5);     // between 5 and 7
  CHECK(nearest_canonical(12) == 9);    // between 9 and 15
  CHECK(nearest_canonical(24) == 17);   // between 17 and 31
  CHECK(nearest_canonical(48) == 33);   // between 33 and 63
  CHECK(nearest_canonical(7) == 7);     // exact members stay put
  CHECK(nearest_canonical(1ull << 31) == 1ull << 31);
  CHECK(nearest_canonical(~0ull) == (1ull << 32) + 1);
}

TEST_CASE("number_text_value truncates fractions and saturates on overflow") {
  CHECK(number_text_value("0") == 0);
  CHECK(number_text_value("41") == 41);
  CHECK(number_text_value("1.9") == 1);
  CHECK(number_text_value("18446744073709551615") == ~0ull);
  CHECK(number_text_value("99999999999999999999999") == ~0ull);
}

TEST_CASE("token map assigns codes in first-insertion order and dedupes") {
  TokenMap m;
  CHECK(m.add(make_token(TokenKind::keyword, "let")) == 0);
  CHECK(m.add(make_token(TokenKind::identifier, "var1")) == 1);
  CHECK(m.add(make_token(TokenKind::keyword, "let")) == 0);
  CHECK(m.add(make_token(TokenKind::identifier, "let")) == 2);  // kind matters
  CHECK(m.size() == 3);
  CHECK(m.code_of(make_token(TokenKind::identifier, "var1")) == 1);
  CHECK_FALSE(m.code_of(make_token(TokenKind::number_literal, "7")).has_value());
  CHECK(m.token_at(2).kind == TokenKind::identifier);
}

TEST_CASE("token map save and load round trip exactly") {
  TokenMap m;
  for (const Token& t : lex("let a = 'x\\'y'; a == 1.5 ? a : \"q\";"))
    m.add(t);
  auto path = temp_file("map_roundtrip.txt");
  m.save(path);
  TokenMap back = TokenMap::load(path);
  CHECK(back == m);
  CHECK(back.size() == m.size());
  std::filesystem::remove(path);
}

TEST_CASE("token map overflows past 65536 entries") {
  TokenMap m;
  for (uint32_t i = 0; i < 65536; i++)
    m.add(make_token(TokenKind::number_literal, std::to_string(i)));
  CHECK(m.size() == 65536);
  CHECK_THROWS_AS(m.add(make_token(TokenKind::number_literal, "65536")),
                  MapOverflow);
  // Re-adding an existing entry is still fine at capacity.
  CHECK(m.add(make_token(TokenKind::number_literal, "7")) == 7);
}

TEST_CASE("encode maps tokens to codes and rejects unknown tokens") {
  TokenMap m;
  for (const Token& t : lex("let a = 1 ;")) m.add(t);
  EncodedInput codes = encode(lex("a = 1 ; let a ;"), m);
  EncodedInput expect = {1, 2, 3, 4, 0, 1, 4};
  CHECK(codes == expect);
  CHECK_THROWS_AS(encode(lex("b"), m), UnknownToken);
}

TEST_CASE("decode wraps out-of-range codes onto the map") {
  TokenMap m;
  for (const Token& t : lex("let a = 1 ;")) m.add(t);  // 5 entries
  CHECK(normalize_code(7, 5) == 2);
  EncodedInput codes = {5, 6, 7, 8, 9};
  TokenSeq toks = decode_tokens(codes, m);
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].text == "let");
  CHECK(toks[2].text == "=");
  CHECK(decode(codes, m) == "let a = 1 ;");
  CHECK(decode(EncodedInput{}, m).empty());
}

TEST_CASE("decode is total over random code arrays") {
  TokenMap m;
  for (const Token& t :
       lex("let a = 1 ; function f ( ) { return 'x' ; } f ( ) . v"))
    m.add(t);
  Rng rng(77);
  for (int i = 0; i < 2000; i++) {
    EncodedInput codes(rng.below(64));
    for (auto& c : codes) c = static_cast<uint16_t>(rng.below(65536));
    std::string text = decode(codes, m);
    TokenSeq back = decode_tokens(codes, m);
    CHECK(back.size() == codes.size());
    (void)text;
  }
}

TEST_CASE("encode after decode is the identity for in-range codes") {
  TokenMap m;
  for (const Token& t : lex("let a = 1 ; print ( a ) { } if else"))
    m.add(t);
  Rng rng(99);
  for (int i = 0; i < 500; i++) {
    EncodedInput codes(rng.below(40));
    for (auto& c : codes) c = static_cast<uint16_t>(rng.below(m.size()));
    CHECK(encode(decode_tokens(codes, m), m) == codes);
  }
}
