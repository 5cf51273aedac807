#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace majority {

inline constexpr const char* kToolVersion = "1.0.0";

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

/**
 * Record of one experiment run. `argv` holds the arguments after the program
 * name with any `--out` pair removed, so a run can be replayed into another
 * directory; `outputs` maps data file names to their SHA-256 digests.
 */
struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::string started;
  std::string finished;
  std::map<std::string, std::string> outputs;
  nlohmann::json results = nlohmann::json::object();

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);

  /// Hashes `name` inside `dir` and records it.
  void record_output(const std::filesystem::path& dir, const std::string& name);
  void write(const std::filesystem::path& file) const;
  static RunManifest read(const std::filesystem::path& file);
};

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace majority
