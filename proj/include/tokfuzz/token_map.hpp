#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>

#include "tokfuzz/errors.hpp"
#include "tokfuzz/token.hpp"

namespace tokfuzz {

// Bijection token <-> 16-bit code, codes in first-insertion order.
class TokenMap {
 public:
  static constexpr size_t kMaxEntries = 65536;

  // Returns the existing code or appends. Throws MapOverflow past 65536.
  uint16_t add(const Token& t);

  std::optional<uint16_t> code_of(const Token& t) const;
  const Token& token_at(uint16_t code) const { return entries_[code]; }
  size_t size() const { return entries_.size(); }
  const std::vector<Token>& entries() const { return entries_; }

  // TOKMAP v1 text format, one entry per line, codes ascending.
  void save(const std::filesystem::path& path) const;
  static TokenMap load(const std::filesystem::path& path);

  bool operator==(const TokenMap& o) const { return entries_ == o.entries_; }

 private:
  static std::string key_of(const Token& t);
  std::vector<Token> entries_;
  std::unordered_map<std::string, uint16_t> index_;
};

}  // namespace tokfuzz
