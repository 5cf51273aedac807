#include <doctest.h>

#include "majority/rule.hpp"
#include "support.hpp"

using namespace majority;

namespace {
constexpr const char* kGkl = "005F005F005F005F005FFF5F005FFF5F";

// GKL by its defining formula: a 0 cell takes the majority of itself and the
// cells 1 and 3 to its left, a 1 cell the same to its right.
bool gkl_formula(unsigned code) {
  auto bit = [code](int offset) { return (code >> (kRadius - offset)) & 1u; };
  const unsigned s = bit(0);
  const unsigned votes = s ? s + bit(1) + bit(3) : s + bit(-1) + bit(-3);
  return votes >= 2;
}
}  // namespace

TEST_CASE("GKL hex decodes to its defining formula") {
  const Rule gkl = parse_rule_hex(kGkl);
  const bool expected_8_15[] = {0, 1, 0, 1, 1, 1, 1, 1};
  for (unsigned k = 8; k < 16; ++k) CHECK(gkl[k] == expected_8_15[k - 8]);
  for (unsigned k = 0; k < kTableSize; ++k) CHECK_MESSAGE(gkl[k] == gkl_formula(k), "code " << k);
}

TEST_CASE("hex round trip") {
  for (const auto& r : kBestKnownRules) CHECK(format_rule_hex(parse_rule_hex(r.hex)) == r.hex);
  CHECK(format_rule_hex(Rule::zeros()) == "00000000000000000000000000000000");
  CHECK(format_rule_hex(Rule::ones()) == "FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF");
  CHECK(format_rule_hex(parse_rule_hex("005f005f005f005f005fff5f005fff5f")) == kGkl);
}

TEST_CASE("bit string round trip and order") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const Rule r = test_support::random_rule(rng);
    CHECK(parse_rule_bits(format_rule_bits(r)) == r);
    CHECK(parse_rule(format_rule_bits(r)) == r);
    CHECK(parse_rule("  " + format_rule_hex(r) + "\n") == r);
  }
  Rule one;
  one.set(0, true);
  CHECK(format_rule_bits(one).front() == '1');
  CHECK(format_rule_hex(one).front() == '8');
}

TEST_CASE("parse errors name the offending position") {
  CHECK_THROWS_AS(parse_rule_hex("ZZZ"), ParseError);
  try {
    parse_rule_hex("005F005F005F005F005FFF5F005FFG5F");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 29);
  }
  std::string bits(kTableSize, '0');
  bits[77] = '2';
  try {
    parse_rule_bits(bits);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 77);
  }
  CHECK_THROWS_AS(parse_rule(""), ParseError);
}

TEST_CASE("hamming distance and flips") {
  const Rule z = Rule::zeros();
  CHECK(hamming_distance(z, Rule::ones()) == kTableSize);
  CHECK(hamming_distance(z, z.flipped(5)) == 1);
  CHECK(z.flipped(5).flipped(5) == z);
}
