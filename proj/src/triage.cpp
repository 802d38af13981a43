#include "tokfuzz/triage.hpp"

#include <algorithm>
#include <fstream>

#include "tokfuzz/corpus_io.hpp"
#include "tokfuzz/errors.hpp"

namespace tokfuzz {

namespace fs = std::filesystem;

CrashStore::CrashStore(fs::path crashes_dir) : dir_(std::move(crashes_dir)) {
  fs::create_directories(dir_);
}

static void write_report_header(const fs::path& dir, const CrashReport& r) {
  std::ofstream out(dir / "report.txt", std::ios::trunc);
  if (!out) throw CorpusFailure("cannot write " + (dir / "report.txt").string());
  if (r.signature.status == ExecStatus::timeout) {
    out << "signature: timeout\n";
  } else {
    out << "signature: assertion " << r.signature.assertion_id << "\n";
  }
  out << "first seen at exec " << r.first_seen_exec << "\n";
  out << "witness:\n" << r.decoded_text << "\n";
}

bool CrashStore::record_tokens(const CrashSignature& sig,
                               const EncodedInput& input, const TokenMap& map,
                               uint64_t exec_index) {
  if (reports_.count(sig)) return false;
  CrashReport r;
  r.signature = sig;
  r.first_seen_exec = exec_index;
  r.witness = input;
  r.decoded_text = decode(input, map);
  fs::path sub = dir_ / sig.dir_name();
  fs::create_directories(sub);
  write_tok_file(sub / "id_0000.tok", input);
  write_bytes_file(sub / "id_0000.js", r.decoded_text);
  write_report_header(sub, r);
  reports_.emplace(sig, std::move(r));
  return true;
}

bool CrashStore::record_bytes(const CrashSignature& sig,
                              const std::string& bytes, uint64_t exec_index) {
  if (reports_.count(sig)) return false;
  CrashReport r;
  r.signature = sig;
  r.first_seen_exec = exec_index;
  r.witness_bytes = bytes;
  r.decoded_text = bytes;
  fs::path sub = dir_ / sig.dir_name();
  fs::create_directories(sub);
  write_bytes_file(sub / "id_0000.raw", bytes);
  write_report_header(sub, r);
  reports_.emplace(sig, std::move(r));
  return true;
}

size_t CrashStore::unique_bugs() const {
  size_t n = 0;
  for (const auto& [sig, r] : reports_)
    if (sig.status == ExecStatus::crash) n++;
  return n;
}

size_t CrashStore::unique_timeouts() const {
  return reports_.size() - unique_bugs();
}

void CrashStore::write_minimized(const CrashSignature& sig,
                                 const std::string& decoded) {
  auto it = reports_.find(sig);
  if (it == reports_.end()) return;
  fs::path sub = dir_ / sig.dir_name();
  std::ofstream out(sub / "report.txt", std::ios::app);
  out << "minimized:\n" << decoded << "\n";
}

static bool matches(const ExecResult& r, const CrashSignature& sig) {
  return r.status == sig.status && r.assertion_id == sig.assertion_id;
}

// Drop [i, i+len) from v.
static EncodedInput without_range(const EncodedInput& v, size_t i, size_t len) {
  EncodedInput out;
  out.reserve(v.size() - len);
  out.insert(out.end(), v.begin(), v.begin() + i);
  out.insert(out.end(), v.begin() + i + len, v.end());
  return out;
}

EncodedInput minimize(const EncodedInput& witness, const CrashSignature& sig,
                      uint16_t semicolon_code, size_t map_size,
                      const ReplayFn& replay) {
  if (!matches(replay(witness), sig))
    throw ReproFailure("witness does not reproduce its crash signature");

  EncodedInput cur = witness;
  bool changed = true;
  while (changed) {
    changed = false;

    // Phase 1: whole statements, largest first. A statement is a code run
    // ending at a semicolon (inclusive); a trailing run without one counts
    // too.
    struct Seg {
      size_t begin, len;
    };
    std::vector<Seg> segs;
    size_t start = 0;
    for (size_t i = 0; i < cur.size(); i++) {
      if (cur[i] % map_size == semicolon_code) {
        segs.push_back({start, i + 1 - start});
        start = i + 1;
      }
    }
    if (start < cur.size()) segs.push_back({start, cur.size() - start});
    std::stable_sort(segs.begin(), segs.end(),
                     [](const Seg& a, const Seg& b) { return a.len > b.len; });
    for (const Seg& s : segs) {
      if (segs.size() < 2) break;
      if (s.len >= cur.size()) continue;
      EncodedInput cand = without_range(cur, s.begin, s.len);
      if (matches(replay(cand), sig)) {
        cur = std::move(cand);
        changed = true;
        break;  // offsets are stale; recompute segments
      }
    }
    if (changed) continue;

    // Phase 2: token runs, power-of-two lengths down to 1.
    size_t len = 1;
    while (len * 2 <= cur.size()) len *= 2;
    for (; len >= 1 && !changed; len /= 2) {
      for (size_t i = 0; i + len <= cur.size(); i++) {
        if (len >= cur.size()) break;
        EncodedInput cand = without_range(cur, i, len);
        if (matches(replay(cand), sig)) {
          cur = std::move(cand);
          changed = true;
          break;
        }
      }
      if (len == 1) break;
    }
  }
  return cur;
}

}  // namespace tokfuzz
