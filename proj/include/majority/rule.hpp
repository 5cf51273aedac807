#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace majority {

inline constexpr int kRadius = 3;
inline constexpr int kNeighborhood = 2 * kRadius + 1;
inline constexpr std::size_t kTableSize = std::size_t{1} << kNeighborhood;  // 128

/// Thrown by the text parsers; `position()` is the 0-based offending index.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/**
 * Radius-3 rule table. Entry k is the next state of a cell whose neighborhood
 * (s[i-3], ..., s[i+3]) reads as the 7-bit integer k with s[i-3] as the most
 * significant bit.
 */
class Rule {
 public:
  using Table = std::bitset<kTableSize>;

  Rule() = default;
  explicit Rule(const Table& table) : table_(table) {}

  static Rule zeros() { return Rule{}; }
  static Rule ones() { return Rule{Table{}.set()}; }

  bool operator[](std::size_t code) const { return table_[code]; }
  bool output(unsigned code) const { return table_[code]; }
  void set(std::size_t code, bool value) { table_.set(code, value); }
  Rule flipped(std::size_t code) const {
    Rule r = *this;
    r.table_.flip(code);
    return r;
  }

  const Table& table() const { return table_; }
  std::size_t count() const { return table_.count(); }

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  Table table_;
};

std::size_t hamming_distance(const Rule& a, const Rule& b);

/// 32 hex characters, case-insensitive. The MSB of the first character is the
/// output for neighborhood code 0.
Rule parse_rule_hex(std::string_view hex);
std::string format_rule_hex(const Rule& rule);

/// 128 characters of '0'/'1', code 0 first.
Rule parse_rule_bits(std::string_view bits);
std::string format_rule_bits(const Rule& rule);

/// Accepts either textual form, ignoring surrounding whitespace.
Rule parse_rule(std::string_view text);

}  // namespace majority

template <>
struct std::hash<majority::Rule> {
  std::size_t operator()(const majority::Rule& r) const noexcept {
    return std::hash<majority::Rule::Table>{}(r.table());
  }
};
