#include "tokfuzz/corpus_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "tokfuzz/errors.hpp"

namespace tokfuzz {

namespace corpus_layout {

namespace fs = std::filesystem;

fs::path tokenmap_file(const fs::path& c) { return c / "tokenmap.txt"; }
fs::path queue_dir(const fs::path& c) { return c / "queue"; }
fs::path seeds_report_file(const fs::path& c) { return c / "seeds_report.txt"; }
fs::path stats_file(const fs::path& c) { return c / "stats.csv"; }
fs::path crashes_dir(const fs::path& c) { return c / "crashes"; }
fs::path mode_file(const fs::path& c) { return c / "mode.txt"; }

std::string queue_name(uint64_t id, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "id_%06llu.%s",
                static_cast<unsigned long long>(id), ext);
  return buf;
}

}  // namespace corpus_layout

void write_tok_file(const std::filesystem::path& path,
                    const EncodedInput& codes) {
  std::string bytes;
  bytes.reserve(codes.size() * 2);
  for (uint16_t c : codes) {
    bytes += static_cast<char>(c & 0xff);
    bytes += static_cast<char>((c >> 8) & 0xff);
  }
  write_bytes_file(path, bytes);
}

EncodedInput read_tok_file(const std::filesystem::path& path) {
  std::string bytes = read_bytes_file(path);
  if (bytes.size() % 2 != 0)
    throw Error("odd-sized token file: " + path.string());
  EncodedInput codes(bytes.size() / 2);
  for (size_t i = 0; i < codes.size(); i++) {
    codes[i] = static_cast<uint16_t>(
        static_cast<uint8_t>(bytes[2 * i]) |
        (static_cast<uint16_t>(static_cast<uint8_t>(bytes[2 * i + 1])) << 8));
  }
  return codes;
}

void write_bytes_file(const std::filesystem::path& path,
                      const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error("write failed: " + path.string());
}

std::string read_bytes_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(f)),
                    std::istreambuf_iterator<char>());
  return bytes;
}

std::vector<std::filesystem::path> list_queue_files(
    const std::filesystem::path& corpus, const char* ext) {
  std::vector<std::filesystem::path> files;
  auto dir = corpus_layout::queue_dir(corpus);
  if (!std::filesystem::exists(dir)) return files;
  std::string suffix = std::string(".") + ext;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto name = e.path().filename().string();
    if (name.rfind("id_", 0) == 0 &&
        name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace tokfuzz
