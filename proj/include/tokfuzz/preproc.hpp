#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tokfuzz/codec.hpp"
#include "tokfuzz/rng.hpp"
#include "tokfuzz/token_map.hpp"

namespace tokfuzz {

// Fixed rename pool: var1 .. var15.
const std::vector<std::string>& variable_pool();

// Identifiers exempt from renaming.
const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);

struct RenameEvent {
  std::string from, to;
};
struct RenumberEvent {
  std::string from, to;
};

// Same identifier -> same pool name; names drawn uniformly without
// replacement, repeating only once all fifteen are used.
TokenSeq rename_variables(const TokenSeq& toks, Rng& rng,
                          std::vector<RenameEvent>* log = nullptr);

// Number literals truncate toward zero, then snap to the canonical pool.
TokenSeq renumber(const TokenSeq& toks,
                  std::vector<RenumberEvent>* log = nullptr);

// Deduplicated union in seed order; extras appended last.
TokenMap build_token_map(const std::vector<TokenSeq>& seeds,
                         const std::vector<Token>& extra);

struct SeedRecord {
  std::string name;
  bool kept = false;
  std::string skip_reason;
  std::vector<RenameEvent> renames;
  std::vector<RenumberEvent> renumbers;
};

struct CorpusBuildResult {
  size_t seeds_seen = 0;
  size_t seeds_kept = 0;
  TokenMap map;
  std::vector<SeedRecord> records;
};

// Reads seeds_dir (sorted file names), writes tokenmap.txt, queue/*.tok and
// seeds_report.txt under corpus_dir. Unlexable seeds are skipped with a
// warning; throws CorpusFailure only if none survive. Deterministic for a
// given rng_seed.
CorpusBuildResult preprocess_corpus(const std::filesystem::path& seeds_dir,
                                    const std::filesystem::path& corpus_dir,
                                    uint64_t rng_seed,
                                    const std::vector<Token>& extra = {});

// One extra token per non-empty line; classified by lexing the line.
std::vector<Token> parse_extra_tokens_file(const std::filesystem::path& path);

}  // namespace tokfuzz
