#include "tokfuzz/mutator.hpp"

#include <algorithm>

namespace tokfuzz {

namespace {

uint16_t random_code(size_t map_size, Rng& rng) {
  return static_cast<uint16_t>(rng.below(map_size ? map_size : 65536));
}

size_t run_len(size_t cap, uint32_t max_run, Rng& rng) {
  size_t hi = std::min<size_t>(max_run, cap);
  return hi == 0 ? 0 : rng.range(1, hi);
}

}  // namespace

EncodedInput random_insert(const EncodedInput& in, size_t map_size, Rng& rng,
                           const MutationBudget& budget) {
  size_t r = rng.range(1, budget.max_run);
  size_t pos = rng.below(in.size() + 1);
  EncodedInput out;
  out.reserve(in.size() + r);
  out.insert(out.end(), in.begin(), in.begin() + pos);
  for (size_t i = 0; i < r; i++) out.push_back(random_code(map_size, rng));
  out.insert(out.end(), in.begin() + pos, in.end());
  return out;
}

EncodedInput random_overwrite(const EncodedInput& in, size_t map_size,
                              Rng& rng, const MutationBudget& budget) {
  EncodedInput out = in;
  size_t r = run_len(in.size(), budget.max_run, rng);
  if (r == 0) return out;
  size_t pos = rng.below(in.size() - r + 1);
  for (size_t i = 0; i < r; i++) out[pos + i] = random_code(map_size, rng);
  return out;
}

EncodedInput random_replace(const EncodedInput& in, size_t map_size, Rng& rng,
                            const MutationBudget& budget) {
  size_t r_out = run_len(in.size(), budget.max_run, rng);
  size_t r_in = rng.range(1, budget.max_run);
  size_t pos = rng.below(in.size() - r_out + 1);
  EncodedInput out;
  out.reserve(in.size() - r_out + r_in);
  out.insert(out.end(), in.begin(), in.begin() + pos);
  for (size_t i = 0; i < r_in; i++) out.push_back(random_code(map_size, rng));
  out.insert(out.end(), in.begin() + pos + r_out, in.end());
  return out;
}

std::vector<std::pair<size_t, size_t>> statement_spans(const EncodedInput& in,
                                                       uint16_t semicolon_code,
                                                       size_t map_size) {
  std::vector<std::pair<size_t, size_t>> spans;
  size_t start = 0;
  for (size_t i = 0; i < in.size(); i++) {
    if (normalize_code(in[i], map_size) == semicolon_code) {
      spans.emplace_back(start, i);
      start = i + 1;
    }
  }
  spans.emplace_back(start, in.size());
  return spans;
}

std::optional<EncodedInput> statement_splice(const EncodedInput& in,
                                             const EncodedInput& donor,
                                             uint16_t semicolon_code,
                                             size_t map_size, Rng& rng) {
  auto in_spans = statement_spans(in, semicolon_code, map_size);
  auto donor_spans = statement_spans(donor, semicolon_code, map_size);
  donor_spans.erase(
      std::remove_if(donor_spans.begin(), donor_spans.end(),
                     [](const auto& s) { return s.first == s.second; }),
      donor_spans.end());
  if (donor_spans.empty()) return std::nullopt;

  auto [is, ie] = in_spans[rng.below(in_spans.size())];
  auto [ds, de] = donor_spans[rng.below(donor_spans.size())];
  EncodedInput out;
  out.reserve(in.size() - (ie - is) + (de - ds));
  out.insert(out.end(), in.begin(), in.begin() + is);
  out.insert(out.end(), donor.begin() + ds, donor.begin() + de);
  out.insert(out.end(), in.begin() + ie, in.end());
  return out;
}

const std::vector<std::string>& token_havoc_ops() {
  static const std::vector<std::string> ops = {
      "insert", "overwrite", "replace", "splice", "delete_run", "duplicate_run",
  };
  return ops;
}

EncodedInput havoc(const EncodedInput& in, size_t map_size,
                   std::optional<uint16_t> semicolon_code,
                   const DonorSampler& donor, Rng& rng,
                   const MutationBudget& budget) {
  EncodedInput cur = in;
  size_t stack = rng.range(1, budget.havoc_stack_max);
  for (size_t s = 0; s < stack; s++) {
    bool grown = cur.size() >= budget.max_len;
    switch (rng.below(token_havoc_ops().size())) {
      case 0:  // insert
        if (!grown) cur = random_insert(cur, map_size, rng, budget);
        break;
      case 1:
        cur = random_overwrite(cur, map_size, rng, budget);
        break;
      case 2:
        cur = random_replace(cur, map_size, rng, budget);
        break;
      case 3: {  // splice, replace fallback
        const EncodedInput* d = donor ? donor() : nullptr;
        std::optional<EncodedInput> spliced;
        if (d && !grown)
          spliced = statement_splice(cur, *d, semicolon_code.value_or(0xffff),
                                     map_size, rng);
        if (spliced)
          cur = std::move(*spliced);
        else
          cur = random_replace(cur, map_size, rng, budget);
        break;
      }
      case 4: {  // delete_run
        size_t r = run_len(cur.size(), budget.max_run, rng);
        if (r == 0) break;
        size_t pos = rng.below(cur.size() - r + 1);
        cur.erase(cur.begin() + pos, cur.begin() + pos + r);
        break;
      }
      case 5: {  // duplicate_run
        size_t r = run_len(cur.size(), budget.max_run, rng);
        if (r == 0 || grown) break;
        size_t pos = rng.below(cur.size() - r + 1);
        EncodedInput run(cur.begin() + pos, cur.begin() + pos + r);
        cur.insert(cur.begin() + pos + r, run.begin(), run.end());
        break;
      }
    }
  }
  return cur;
}

DeterministicWalk::DeterministicWalk(const EncodedInput& in, size_t map_size,
                                     uint32_t k)
    : in_(in),
      map_size_(map_size),
      stride_(static_cast<uint32_t>((map_size + k - 1) / k)) {
  if (stride_ == 0) stride_ = 1;
}

bool DeterministicWalk::next(EncodedInput& out) {
  while (pos_ < in_.size()) {
    uint64_t code = static_cast<uint64_t>(step_) * stride_;
    if (code >= map_size_) {
      pos_++;
      step_ = 0;
      continue;
    }
    step_++;
    if (static_cast<uint16_t>(code) == in_[pos_]) continue;  // identity
    out = in_;
    out[pos_] = static_cast<uint16_t>(code);
    return true;
  }
  return false;
}

namespace {

const int8_t kInteresting8[] = {-128, -1, 0, 1, 16, 32, 64, 100, 127};
const int16_t kInteresting16[] = {-32768, -129, 128,  255,  256,
                                  512,    1000, 1024, 4096, 32767};
const int32_t kInteresting32[] = {INT32_MIN, -100663046, -32769,    32768,
                                  65535,     65536,      100663045, INT32_MAX};

void put_le(EncodedInput& v, size_t pos, uint64_t val, size_t width) {
  for (size_t i = 0; i < width; i++)
    v[pos + i] = static_cast<uint16_t>((val >> (8 * i)) & 0xff);
}

uint64_t get_le(const EncodedInput& v, size_t pos, size_t width) {
  uint64_t val = 0;
  for (size_t i = 0; i < width; i++)
    val |= static_cast<uint64_t>(v[pos + i] & 0xff) << (8 * i);
  return val;
}

}  // namespace

EncodedInput byte_havoc(const EncodedInput& in,
                        const std::vector<std::string>& dict, Rng& rng,
                        const MutationBudget& budget) {
  EncodedInput cur = in;
  // AFL havoc stacking: 2..128 ops, power-of-two weighted.
  size_t stack = size_t{1} << (1 + rng.below(7));
  for (size_t s = 0; s < stack; s++) {
    size_t len = cur.size();
    bool grown = len >= budget.max_len;
    switch (rng.below(13)) {
      case 0:  // flip one bit
        if (len) cur[rng.below(len)] ^= 1 << rng.below(8);
        break;
      case 1:  // random byte
        if (len) cur[rng.below(len)] = static_cast<uint16_t>(rng.below(256));
        break;
      case 2:  // interesting 8
        if (len)
          cur[rng.below(len)] = static_cast<uint8_t>(
              kInteresting8[rng.below(std::size(kInteresting8))]);
        break;
      case 3:  // interesting 16
        if (len >= 2)
          put_le(cur, rng.below(len - 1),
                 static_cast<uint16_t>(
                     kInteresting16[rng.below(std::size(kInteresting16))]),
                 2);
        break;
      case 4:  // interesting 32
        if (len >= 4)
          put_le(cur, rng.below(len - 3),
                 static_cast<uint32_t>(
                     kInteresting32[rng.below(std::size(kInteresting32))]),
                 4);
        break;
      case 5:  // arith 8
        if (len) {
          size_t pos = rng.below(len);
          uint8_t delta = static_cast<uint8_t>(rng.range(1, 35));
          uint8_t v = static_cast<uint8_t>(cur[pos]);
          cur[pos] = static_cast<uint8_t>(rng.chance(1, 2) ? v + delta
                                                           : v - delta);
        }
        break;
      case 6:  // arith 16
        if (len >= 2) {
          size_t pos = rng.below(len - 1);
          uint16_t v = static_cast<uint16_t>(get_le(cur, pos, 2));
          uint16_t delta = static_cast<uint16_t>(rng.range(1, 35));
          put_le(cur, pos,
                 static_cast<uint16_t>(rng.chance(1, 2) ? v + delta
                                                        : v - delta),
                 2);
        }
        break;
      case 7:  // arith 32
        if (len >= 4) {
          size_t pos = rng.below(len - 3);
          uint32_t v = static_cast<uint32_t>(get_le(cur, pos, 4));
          uint32_t delta = static_cast<uint32_t>(rng.range(1, 35));
          put_le(cur, pos, rng.chance(1, 2) ? v + delta : v - delta, 4);
        }
        break;
      case 8: {  // delete run
        if (!len) break;
        size_t r = std::min<size_t>(rng.range(1, 16), len);
        size_t pos = rng.below(len - r + 1);
        cur.erase(cur.begin() + pos, cur.begin() + pos + r);
        break;
      }
      case 9: {  // clone run or insert constant run
        if (!len || grown) break;
        size_t r = std::min<size_t>(rng.range(1, 16), len);
        size_t to = rng.below(len + 1);
        EncodedInput run;
        if (rng.chance(3, 4)) {
          size_t from = rng.below(len - r + 1);
          run.assign(cur.begin() + from, cur.begin() + from + r);
        } else {
          run.assign(r, static_cast<uint16_t>(rng.below(256)));
        }
        cur.insert(cur.begin() + to, run.begin(), run.end());
        break;
      }
      case 10: {  // overwrite with copy of another run
        if (len < 2) break;
        size_t r = std::min<size_t>(rng.range(1, 16), len - 1);
        size_t from = rng.below(len - r + 1);
        size_t to = rng.below(len - r + 1);
        EncodedInput run(cur.begin() + from, cur.begin() + from + r);
        std::copy(run.begin(), run.end(), cur.begin() + to);
        break;
      }
      case 11: {  // dictionary overwrite
        if (dict.empty() || !len) break;
        const std::string& w = dict[rng.below(dict.size())];
        if (w.size() > len) break;
        size_t pos = rng.below(len - w.size() + 1);
        for (size_t i = 0; i < w.size(); i++)
          cur[pos + i] = static_cast<uint8_t>(w[i]);
        break;
      }
      case 12: {  // dictionary insert
        if (dict.empty() || grown) break;
        const std::string& w = dict[rng.below(dict.size())];
        size_t pos = rng.below(len + 1);
        EncodedInput run;
        for (char c : w) run.push_back(static_cast<uint8_t>(c));
        cur.insert(cur.begin() + pos, run.begin(), run.end());
        break;
      }
    }
  }
  return cur;
}

}  // namespace tokfuzz
