#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tokfuzz/codec.hpp"

namespace tokfuzz {

namespace corpus_layout {
std::filesystem::path tokenmap_file(const std::filesystem::path& corpus);
std::filesystem::path queue_dir(const std::filesystem::path& corpus);
std::filesystem::path seeds_report_file(const std::filesystem::path& corpus);
std::filesystem::path stats_file(const std::filesystem::path& corpus);
std::filesystem::path crashes_dir(const std::filesystem::path& corpus);
std::filesystem::path mode_file(const std::filesystem::path& corpus);
std::string queue_name(uint64_t id, const char* ext);  // id_NNNNNN.<ext>
}  // namespace corpus_layout

// Raw little-endian 16-bit codes, no header.
void write_tok_file(const std::filesystem::path& path, const EncodedInput& codes);
EncodedInput read_tok_file(const std::filesystem::path& path);

void write_bytes_file(const std::filesystem::path& path, const std::string& bytes);
std::string read_bytes_file(const std::filesystem::path& path);

// Queue entries of one campaign mode, sorted by id.
std::vector<std::filesystem::path> list_queue_files(
    const std::filesystem::path& corpus, const char* ext);

}  // namespace tokfuzz
