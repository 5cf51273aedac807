#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "majority/blok.hpp"
#include "majority/symmetry.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = majority::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("majority_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("eval prints one CSV row") {
  const auto r = run({"eval", "--rule", "005F005F005F005F005FFF5F005FFF5F", "--n", "10000", "--seed", "1"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "hex,n,seed,performance");
  const double perf = std::stod(row.substr(row.rfind(',') + 1));
  CHECK(std::abs(perf - 0.815) <= 0.012);
}

TEST_CASE("errors map to exit codes") {
  const auto bad = run({"eval", "--rule", "ZZZ", "--seed", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed rule") != std::string::npos);
  CHECK(run({"eval", "--seed", "1"}).code == 1);
  CHECK(run({"eval", "--rule", "005F005F005F005F005FFF5F005FFF5F"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"eval", "--rule", "005F005F005F005F005FFF5F005FFF5F", "--seed", "1", "--lattice", "148"}).code == 2);
  CHECK(run({"acf", "--input", "/nonexistent/walk.csv"}).code == 3);
  CHECK(run({"olympus", "check", "--rule", "00000000000000000000000000000000", "--template", "/nonexistent"}).code == 3);
  CHECK(run({"ga", "--template", "/nonexistent", "--seed", "1"}).code != 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("levels") {
  const auto r = run({"levels", "--n", "100", "--n", "10000"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "n,levels\n100,11\n10000,113\n");
}

TEST_CASE("olympus derive report agrees with the library") {
  const fs::path rules = scratch("rules.txt");
  {
    std::ofstream f(rules);
    for (const auto& r : majority::kBestKnownRules) f << r.name << ' ' << r.hex << '\n';
  }
  const fs::path dir = scratch("derive");
  REQUIRE(run({"olympus", "derive", "--rules", rules.string(), "--out", dir.string()}).code == 0);
  const auto report = nlohmann::json::parse(slurp(dir / "olympus.json"));
  const auto d = majority::derive_olympus(test_support::blok_rules());
  CHECK(report["joint_bits"] == d.joint_bits);
  CHECK(report["template"] == d.tmpl.format());
  CHECK(report["optimal_sets"].size() == d.optimal_sets.size());
  CHECK(report["rules"].size() == 6);
  CHECK(slurp(dir / "template.txt") == d.tmpl.format() + "\n");

  const auto check = run({"olympus", "check", "--rule", format_rule_hex(d.chosen[5].rule), "--template",
                          (dir / "template.txt").string()});
  REQUIRE(check.code == 0);
  CHECK(check.out.find(",true,") != std::string::npos);
  fs::remove(rules);
}

TEST_CASE("manifests replay byte-identically") {
  const fs::path dir = scratch("walk");
  REQUIRE(run({"nwalk", "--mode", "random", "--start", "00000000000000000000000000000000", "--n", "200",
               "--steps", "5", "--seed", "3", "--out", dir.string()})
              .code == 0);
  const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest["subcommand"] == "nwalk");
  CHECK(manifest["seed"] == 3);
  CHECK(manifest["outputs"].contains("walk.csv"));
  for (const auto& a : manifest["argv"]) CHECK(a != "--out");

  const fs::path again = scratch("walk_again");
  const auto replay = run({"rerun", "--manifest", (dir / "manifest.json").string(), "--out", again.string()});
  CHECK(replay.code == 0);
  CHECK(slurp(dir / "walk.csv") == slurp(again / "walk.csv"));

  // A tampered digest is reported as a mismatch.
  auto tampered = manifest;
  tampered["outputs"]["walk.csv"] = std::string(64, '0');
  {
    std::ofstream f(dir / "manifest.json");
    f << tampered.dump();
  }
  CHECK(run({"rerun", "--manifest", (dir / "manifest.json").string(), "--out", scratch("walk_third").string()}).code == 4);
}
