#include "majority/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace majority {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

nlohmann::json RunManifest::to_json() const {
  return {{"subcommand", subcommand}, {"parameters", parameters}, {"argv", argv},
          {"seed", seed},             {"version", version},       {"started", started},
          {"finished", finished},     {"outputs", outputs},       {"results", results}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  m.parameters = j.value("parameters", nlohmann::json::object());
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.seed = j.value("seed", std::uint64_t{0});
  m.version = j.value("version", std::string{});
  m.started = j.value("started", std::string{});
  m.finished = j.value("finished", std::string{});
  m.outputs = j.value("outputs", std::map<std::string, std::string>{});
  m.results = j.value("results", nlohmann::json::object());
  return m;
}

void RunManifest::record_output(const std::filesystem::path& dir, const std::string& name) {
  outputs[name] = sha256_file(dir / name);
}

void RunManifest::write(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << to_json().dump(2) << '\n';
}

RunManifest RunManifest::read(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read manifest " + file.string());
  return from_json(nlohmann::json::parse(in));
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

}  // namespace majority
