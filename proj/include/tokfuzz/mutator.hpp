#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tokfuzz/codec.hpp"
#include "tokfuzz/rng.hpp"

namespace tokfuzz {

struct MutationBudget {
  uint32_t max_run = 3;          // tokens touched per operation
  uint32_t havoc_stack_max = 8;  // stacked operations per havoc round
  size_t max_len = 4096;         // growth operations skip beyond this
};

// May return nullptr when the corpus has nothing to offer.
using DonorSampler = std::function<const EncodedInput*()>;

// Inserts 1..max_run random codes at a random position.
EncodedInput random_insert(const EncodedInput& in, size_t map_size, Rng& rng,
                           const MutationBudget& budget);

// Overwrites a run of 1..max_run codes in place; length preserved.
EncodedInput random_overwrite(const EncodedInput& in, size_t map_size,
                              Rng& rng, const MutationBudget& budget);

// Removes a run of 1..max_run codes, inserts 1..max_run fresh ones (drawn
// independently) at the same position.
EncodedInput random_replace(const EncodedInput& in, size_t map_size, Rng& rng,
                            const MutationBudget& budget);

// Semicolon-delimited spans, exclusive of the bounding semicolons; input
// start and end count as boundaries. Codes are compared after wrapping.
std::vector<std::pair<size_t, size_t>> statement_spans(const EncodedInput& in,
                                                       uint16_t semicolon_code,
                                                       size_t map_size);

// Replaces one input span with one non-empty donor span. nullopt = no
// eligible span on the donor side.
std::optional<EncodedInput> statement_splice(const EncodedInput& in,
                                             const EncodedInput& donor,
                                             uint16_t semicolon_code,
                                             size_t map_size, Rng& rng);

// Names of the operations token-mode havoc draws from (audited by tests:
// no arithmetic, no interesting-number table).
const std::vector<std::string>& token_havoc_ops();

// Stack of 1..havoc_stack_max operations drawn uniformly from
// token_havoc_ops(). Splice without a usable donor span falls back to
// random_replace.
EncodedInput havoc(const EncodedInput& in, size_t map_size,
                   std::optional<uint16_t> semicolon_code,
                   const DonorSampler& donor, Rng& rng,
                   const MutationBudget& budget);

// Single-position substitutions: for each position, k evenly spaced codes
// (stride = ceil(map_size / k)), identity substitutions skipped.
class DeterministicWalk {
 public:
  DeterministicWalk(const EncodedInput& in, size_t map_size, uint32_t k = 16);
  bool next(EncodedInput& out);

 private:
  const EncodedInput& in_;
  size_t map_size_;
  uint32_t stride_;
  size_t pos_ = 0;
  uint32_t step_ = 0;
};

// AFL-style byte havoc for the baseline mode: bit flips, interesting values,
// arithmetic, run edits, dictionary overwrite/insert. Operates on byte
// values stored one per element.
EncodedInput byte_havoc(const EncodedInput& in,
                        const std::vector<std::string>& dict, Rng& rng,
                        const MutationBudget& budget);

}  // namespace tokfuzz
