#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tokfuzz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict lexing rejected a character or an unterminated literal.
struct LexError : Error {
  size_t pos;
  LexError(size_t p, const std::string& msg)
      : Error("lex error at " + std::to_string(p) + ": " + msg), pos(p) {}
};

// Token map would exceed the 16-bit code space.
struct MapOverflow : Error {
  using Error::Error;
};

// encode() saw a token that is not in the map.
struct UnknownToken : Error {
  using Error::Error;
};

// No seed survived preprocessing.
struct CorpusFailure : Error {
  using Error::Error;
};

struct SpawnFailure : Error {
  using Error::Error;
};

struct HandshakeMismatch : Error {
  using Error::Error;
};

struct ProtocolError : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

// Crash witness no longer reproduces under re-execution.
struct ReproFailure : Error {
  using Error::Error;
};

}  // namespace tokfuzz
