#pragma once

#include <array>
#include <string_view>

namespace majority {

struct NamedRule {
  std::string_view name;
  std::string_view hex;
  double published_performance;  // standard performance at n = 10^4
};

/// The six best known radius-3 majority rules.
inline constexpr std::array<NamedRule, 6> kBestKnownRules{{
    {"GKL", "005F005F005F005F005FFF5F005FFF5F", 0.815},
    {"Das", "009F038F001FBF1F002FFB5F001FFF1F", 0.823},
    {"Davis", "070007FF0F000FFF0F0007FF0F310FFF", 0.818},
    {"ABK", "050055050500550555FF55FF55FF55FF", 0.824},
    {"Coe1", "011430D7110F395705B4FF17F13DF957", 0.851},
    {"Coe2", "1451305C0050CE5F1711FF5F0F53CF5F", 0.860},
}};

/// Olympus template as published with the rules above (51 fixed, 77 free).
inline constexpr std::string_view kPublishedOlympusTemplate =
    "000*0*0* 0****1** 0***00** **0**1** 000***** 0*0**1** ******** 0*0**1*1 "
    "0*0***** *****1** 111111** **0**111 ******** 0**1*1*1 11111**1 0*01*111";

}  // namespace majority
