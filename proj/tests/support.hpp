#pragma once

#include <bit>
#include <vector>

#include "majority/blok.hpp"
#include "majority/configuration.hpp"
#include "majority/rng.hpp"
#include "majority/rule.hpp"

namespace test_support {

using namespace majority;

inline Rule random_rule(Rng& rng) {
  Rule r;
  for (std::size_t k = 0; k < kTableSize; ++k) r.set(k, rng() & 1);
  return r;
}

inline Configuration random_config(Rng& rng, int size = kDefaultLattice) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(size));
  for (auto& c : cells) c = rng() & 1;
  return Configuration(std::move(cells));
}

inline Rule blok(std::string_view name) {
  for (const auto& r : kBestKnownRules) {
    if (r.name == name) return parse_rule_hex(r.hex);
  }
  throw std::invalid_argument("unknown rule");
}

inline std::vector<Rule> blok_rules() {
  std::vector<Rule> rules;
  for (const auto& r : kBestKnownRules) rules.push_back(parse_rule_hex(r.hex));
  return rules;
}

/// Local majority of all seven cells; invariant under both task symmetries.
inline Rule local_majority() {
  Rule r;
  for (unsigned k = 0; k < kTableSize; ++k) r.set(k, std::popcount(k) >= 4);
  return r;
}

}  // namespace test_support
