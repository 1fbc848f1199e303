#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drcskit {

std::uint64_t fnv1a64(std::string_view data);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string digest_hex(std::uint64_t digest);

// Writes content atomically: temp file in the target directory, fsync-free
// rename over the destination. No partial files are ever visible.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Reproducibility record accompanying every file the CLI writes.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> inputs;  // path -> digest
  std::string version;
  std::string timestamp;  // UTC RFC 3339; honors SOURCE_DATE_EPOCH
};

RunManifest make_manifest(
    std::string command,
    std::vector<std::pair<std::string, std::string>> parameters,
    const std::vector<std::filesystem::path>& inputs);

std::string manifest_to_json(const RunManifest& m);

// Writes <output>.manifest.json next to the artifact.
void write_manifest(const RunManifest& m,
                    const std::filesystem::path& output_path);

std::string json_escape(std::string_view s);

}  // namespace drcskit
