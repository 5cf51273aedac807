#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "majority/rng.hpp"
#include "majority/rule.hpp"

namespace majority {

/// Reverses the 7-bit neighborhood code (mirror image of the neighborhood).
constexpr unsigned reverse_code(unsigned code) {
  unsigned r = 0;
  for (int b = 0; b < kNeighborhood; ++b) r |= ((code >> b) & 1u) << (kNeighborhood - 1 - b);
  return r;
}

/// 0/1 symmetry: y[k] = 1 - x[127 - k]. Conjugates the rule by complementation.
Rule s01(const Rule& rule);
/// Right/left symmetry: y[k] = x[reverse_code(k)]. Conjugates by reflection.
Rule srl(const Rule& rule);

enum class Symmetry { Identity, S01, Srl, Both };

std::string_view symmetry_name(Symmetry s);
Rule apply_symmetry(Symmetry s, const Rule& rule);

struct Variant {
  Symmetry symmetry;
  Rule rule;
};

/// Distinct members of {r, s01(r), srl(r), s01(srl(r))}, in that order; a
/// duplicate is labelled by the first symmetry that produces it.
std::vector<Variant> symmetric_variants(const Rule& rule);

/// 128 positions of '0', '1' or '*' (free).
class OlympusTemplate {
 public:
  OlympusTemplate();
  explicit OlympusTemplate(const std::array<char, kTableSize>& symbols);

  /// Whitespace between symbols is ignored.
  static OlympusTemplate parse(std::string_view text);
  static OlympusTemplate full_space() { return OlympusTemplate(); }
  std::string format() const;

  char symbol(std::size_t code) const { return symbols_[code]; }
  bool is_free(std::size_t code) const { return symbols_[code] == '*'; }
  std::size_t fixed_count() const { return kTableSize - free_.size(); }
  const std::vector<std::size_t>& free_positions() const { return free_; }
  bool contains(const Rule& rule) const;

  friend bool operator==(const OlympusTemplate& a, const OlympusTemplate& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::array<char, kTableSize> symbols_;
  std::vector<std::size_t> free_;
};

/// Bits at the free positions of a template, in free-position order.
using Genotype = std::vector<std::uint8_t>;

Rule embed(const Genotype& genotype, const OlympusTemplate& tmpl);
/// Throws std::invalid_argument naming the first fixed position `rule` violates.
Genotype project(const Rule& rule, const OlympusTemplate& tmpl);
Rule sample_olympus(const OlympusTemplate& tmpl, Rng& rng);
Rule sample_olympus(const OlympusTemplate& tmpl, std::uint64_t seed);

/// Positions where all rules agree.
std::size_t joint_bits(std::span<const Rule> rules);
OlympusTemplate template_of(std::span<const Rule> rules);

struct OlympusDerivation {
  OlympusTemplate tmpl;
  std::size_t joint_bits = 0;
  std::size_t combinations = 0;
  std::vector<Variant> chosen;
  /// Every symmetry assignment attaining `joint_bits`, in enumeration order.
  std::vector<std::vector<Symmetry>> optimal_sets;
};

/**
 * Exhaustive search over one symmetric variant per input rule for the
 * assignment maximizing the number of positions on which all agree.
 * Assignments are enumerated lexicographically (Identity < S01 < Srl < Both
 * per rule, first rule most significant) and the first maximum is chosen.
 */
OlympusDerivation derive_olympus(std::span<const Rule> rules);

}  // namespace majority
