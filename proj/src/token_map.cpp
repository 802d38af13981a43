#include "tokfuzz/token_map.hpp"

#include <fstream>
#include <sstream>

namespace tokfuzz {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); i++) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      i++;
      switch (s[i]) {
        case '\\': out += '\\'; break;
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        default: out += s[i];
      }
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

std::string TokenMap::key_of(const Token& t) {
  std::string k(1, static_cast<char>('0' + static_cast<int>(t.kind)));
  k += t.text;
  return k;
}

uint16_t TokenMap::add(const Token& t) {
  auto it = index_.find(key_of(t));
  if (it != index_.end()) return it->second;
  if (entries_.size() >= kMaxEntries)
    throw MapOverflow("token map exceeds 65536 entries");
  uint16_t code = static_cast<uint16_t>(entries_.size());
  entries_.push_back(t);
  index_.emplace(key_of(t), code);
  return code;
}

std::optional<uint16_t> TokenMap::code_of(const Token& t) const {
  auto it = index_.find(key_of(t));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void TokenMap::save(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << "TOKMAP v1 " << entries_.size() << "\n";
  for (size_t i = 0; i < entries_.size(); i++) {
    const Token& t = entries_[i];
    f << i << '\t' << kind_name(t.kind) << '\t' << escape(t.text) << '\t'
      << (t.spacing == Spacing::glue ? "glue" : "normal") << "\n";
  }
  if (!f) throw Error("write failed: " + path.string());
}

TokenMap TokenMap::load(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path.string());
  std::string header;
  std::getline(f, header);
  std::istringstream hs(header);
  std::string magic, version;
  size_t count = 0;
  hs >> magic >> version >> count;
  if (magic != "TOKMAP" || version != "v1" || count > kMaxEntries)
    throw Error("bad token map header in " + path.string());
  TokenMap m;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    size_t start = 0;
    for (int c = 0; c < 3; c++) {
      size_t tab = line.find('\t', start);
      if (tab == std::string::npos)
        throw Error("bad token map line in " + path.string());
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    cols.push_back(line.substr(start));
    TokenKind kind;
    if (!kind_from_name(cols[1], kind))
      throw Error("bad token kind in " + path.string());
    Token t;
    t.kind = kind;
    t.text = unescape(cols[2]);
    t.spacing = (cols[3] == "glue") ? Spacing::glue : Spacing::normal;
    if (std::stoull(cols[0]) != m.entries_.size())
      throw Error("non-sequential code in " + path.string());
    m.add(t);
  }
  if (m.size() != count)
    throw Error("token map count mismatch in " + path.string());
  return m;
}

}  // namespace tokfuzz
