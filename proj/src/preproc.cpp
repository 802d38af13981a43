#include "tokfuzz/preproc.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "tokfuzz/corpus_io.hpp"
#include "tokfuzz/lexer.hpp"
#include "tokfuzz/numbers.hpp"

namespace tokfuzz {

namespace fs = std::filesystem;

const std::vector<std::string>& variable_pool() {
  static const std::vector<std::string> pool = [] {
    std::vector<std::string> v;
    for (int i = 1; i <= 15; i++) v.push_back("var" + std::to_string(i));
    return v;
  }();
  return pool;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "print", "length", "push", "pop", "shift", "unshift", "Array", "String",
  };
  return names;
}

bool is_builtin(const std::string& name) {
  const auto& b = builtin_names();
  return std::find(b.begin(), b.end(), name) != b.end();
}

TokenSeq rename_variables(const TokenSeq& toks, Rng& rng,
                          std::vector<RenameEvent>* log) {
  const auto& pool = variable_pool();
  std::map<std::string, std::string> assigned;
  std::vector<std::string> order;  // shuffled pool block, refilled on exhaust
  size_t used = 0;

  auto next_name = [&]() -> std::string {
    if (used == order.size()) {
      std::vector<std::string> block = pool;
      // Fisher-Yates, uniform over permutations.
      for (size_t i = block.size(); i > 1; i--)
        std::swap(block[i - 1], block[rng.below(i)]);
      order.insert(order.end(), block.begin(), block.end());
    }
    return order[used++];
  };

  TokenSeq out;
  out.reserve(toks.size());
  for (const Token& t : toks) {
    if (t.kind != TokenKind::identifier || is_builtin(t.text)) {
      out.push_back(t);
      continue;
    }
    auto it = assigned.find(t.text);
    if (it == assigned.end()) {
      std::string name = next_name();
      if (log) log->push_back({t.text, name});
      it = assigned.emplace(t.text, std::move(name)).first;
    }
    out.push_back(make_token(TokenKind::identifier, it->second));
  }
  return out;
}

TokenSeq renumber(const TokenSeq& toks, std::vector<RenumberEvent>* log) {
  TokenSeq out;
  out.reserve(toks.size());
  for (const Token& t : toks) {
    if (t.kind != TokenKind::number_literal) {
      out.push_back(t);
      continue;
    }
    uint64_t canonical = nearest_canonical(number_text_value(t.text));
    std::string text = std::to_string(canonical);
    if (log && text != t.text) log->push_back({t.text, text});
    out.push_back(make_token(TokenKind::number_literal, std::move(text)));
  }
  return out;
}

TokenMap build_token_map(const std::vector<TokenSeq>& seeds,
                         const std::vector<Token>& extra) {
  TokenMap map;
  for (const TokenSeq& s : seeds)
    for (const Token& t : s) map.add(t);
  for (const Token& t : extra) map.add(t);
  return map;
}

std::vector<Token> parse_extra_tokens_file(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path.string());
  std::vector<Token> out;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      TokenSeq toks = lex(line);
      if (toks.size() == 1) {
        out.push_back(toks[0]);
        continue;
      }
    } catch (const LexError&) {
      // fall through to the raw single-character case
    }
    if (line.size() == 1) {
      out.push_back(make_token(TokenKind::punctuator, line));
      continue;
    }
    throw Error("extra-tokens line is not a single token: " + line);
  }
  return out;
}

CorpusBuildResult preprocess_corpus(const fs::path& seeds_dir,
                                    const fs::path& corpus_dir,
                                    uint64_t rng_seed,
                                    const std::vector<Token>& extra) {
  std::vector<fs::path> files;
  if (!fs::exists(seeds_dir) || !fs::is_directory(seeds_dir))
    throw CorpusFailure("seed directory missing: " + seeds_dir.string());
  for (const auto& e : fs::directory_iterator(seeds_dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });

  CorpusBuildResult res;
  res.seeds_seen = files.size();
  Rng corpus_rng(rng_seed);
  std::vector<TokenSeq> processed;

  for (size_t i = 0; i < files.size(); i++) {
    SeedRecord rec;
    rec.name = files[i].filename().string();
    // Per-seed stream: stable even if earlier seeds fail to lex.
    Rng seed_rng = Rng(rng_seed).fork(i + 1);
    std::string text = read_bytes_file(files[i]);
    try {
      TokenSeq toks = lex(text);
      toks = rename_variables(toks, seed_rng, &rec.renames);
      toks = renumber(toks, &rec.renumbers);
      processed.push_back(std::move(toks));
      rec.kept = true;
    } catch (const LexError& e) {
      rec.skip_reason = e.what();
      std::cerr << "warning: skipping seed " << rec.name << ": " << e.what()
                << "\n";
    }
    res.records.push_back(std::move(rec));
  }

  res.seeds_kept = processed.size();
  if (processed.empty())
    throw CorpusFailure("no seed survived preprocessing in " +
                        seeds_dir.string());

  res.map = build_token_map(processed, extra);

  fs::create_directories(corpus_layout::queue_dir(corpus_dir));
  res.map.save(corpus_layout::tokenmap_file(corpus_dir));
  uint64_t id = 0;
  for (const TokenSeq& toks : processed) {
    EncodedInput codes = encode(toks, res.map);
    write_tok_file(corpus_layout::queue_dir(corpus_dir) /
                       corpus_layout::queue_name(id, "tok"),
                   codes);
    id++;
  }

  std::ofstream report(corpus_layout::seeds_report_file(corpus_dir),
                       std::ios::binary | std::ios::trunc);
  report << "seeds " << res.seeds_seen << " kept " << res.seeds_kept
         << " tokens " << res.map.size() << "\n";
  for (const SeedRecord& rec : res.records) {
    report << "seed " << rec.name << (rec.kept ? "" : " SKIPPED") << "\n";
    if (!rec.kept) {
      report << "  reason " << rec.skip_reason << "\n";
      continue;
    }
    for (const auto& ev : rec.renames)
      report << "  rename " << ev.from << " -> " << ev.to << "\n";
    for (const auto& ev : rec.renumbers)
      report << "  renumber " << ev.from << " -> " << ev.to << "\n";
  }
  return res;
}

}  // namespace tokfuzz
