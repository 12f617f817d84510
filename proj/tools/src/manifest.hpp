#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace flowfilter::cli {

// FNV-1a over the bytes, as 16 hex digits. Only used to detect changed files.
std::string fnv1a_hex(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

struct OutputRecord {
  std::string path;
  std::uint64_t bytes = 0;
  std::string digest;
  bool reproducible = true;  // false when the file carries wall-clock timings
};

// Everything needed to re-run a command and check its outputs.
struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json input;       // {path, fnv1a64} or generator config
  nlohmann::json parameters;  // algorithms, k / k_max, seed, ...
  std::vector<OutputRecord> outputs;

  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json& j);
};

std::string manifest_path_for(const std::string& output);

// Writes `<output>.manifest.json` next to every recorded output.
void write_manifests(const Manifest& m);

}  // namespace flowfilter::cli
