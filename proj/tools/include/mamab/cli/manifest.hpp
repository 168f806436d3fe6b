#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mamab::cli {

std::string sha256_hex(std::string_view bytes);

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::uintmax_t size = 0;
  std::string sha256;
};

struct RunManifest {
  std::string config_hash;
  std::string tool_version;
  std::string started_at;
  std::string finished_at;
  std::uint64_t seed = 0;
  std::vector<ManifestEntry> files;

  std::string to_json() const;
};

/// Current UTC time as ISO-8601 with seconds.
std::string utc_timestamp();

}  // namespace mamab::cli
