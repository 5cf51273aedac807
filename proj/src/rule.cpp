#include "majority/rule.hpp"

#include <cctype>

namespace majority {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::size_t hamming_distance(const Rule& a, const Rule& b) {
  return (a.table() ^ b.table()).count();
}

Rule parse_rule_hex(std::string_view hex) {
  constexpr std::size_t kChars = kTableSize / 4;
  if (hex.size() != kChars) {
    throw ParseError("rule hex must have " + std::to_string(kChars) + " characters, got " +
                         std::to_string(hex.size()),
                     std::min(hex.size(), kChars));
  }
  Rule rule;
  for (std::size_t j = 0; j < kChars; ++j) {
    const int v = hex_value(hex[j]);
    if (v < 0) {
      throw ParseError("invalid hex character '" + std::string(1, hex[j]) + "' at position " +
                           std::to_string(j),
                       j);
    }
    for (int b = 0; b < 4; ++b) rule.set(4 * j + b, (v >> (3 - b)) & 1);
  }
  return rule;
}

std::string format_rule_hex(const Rule& rule) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out(kTableSize / 4, '0');
  for (std::size_t j = 0; j < out.size(); ++j) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | static_cast<int>(rule[4 * j + b]);
    out[j] = kDigits[v];
  }
  return out;
}

Rule parse_rule_bits(std::string_view bits) {
  if (bits.size() != kTableSize) {
    throw ParseError("rule bit string must have 128 characters, got " + std::to_string(bits.size()),
                     std::min(bits.size(), kTableSize));
  }
  Rule rule;
  for (std::size_t k = 0; k < kTableSize; ++k) {
    if (bits[k] != '0' && bits[k] != '1') {
      throw ParseError("invalid bit character '" + std::string(1, bits[k]) + "' at position " +
                           std::to_string(k),
                       k);
    }
    rule.set(k, bits[k] == '1');
  }
  return rule;
}

std::string format_rule_bits(const Rule& rule) {
  std::string out(kTableSize, '0');
  for (std::size_t k = 0; k < kTableSize; ++k) out[k] = rule[k] ? '1' : '0';
  return out;
}

Rule parse_rule(std::string_view text) {
  text = trim(text);
  if (text.size() == kTableSize) return parse_rule_bits(text);
  return parse_rule_hex(text);
}

}  // namespace majority
