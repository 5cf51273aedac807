#include <stdexcept>

#include "majority/ca.hpp"

namespace majority {

Configuration step(const Rule& rule, const Configuration& config) {
  const int n = config.size();
  std::vector<std::uint8_t> next(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    unsigned code = 0;
    for (int d = -kRadius; d <= kRadius; ++d) {
      code = (code << 1) | static_cast<unsigned>(config[((i + d) % n + n) % n]);
    }
    next[static_cast<std::size_t>(i)] = rule[code] ? 1 : 0;
  }
  return Configuration(std::move(next));
}

Outcome evolve(const Rule& rule, const Configuration& ic, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  Configuration state = ic;
  for (int t = 0;; ++t) {
    const int u = state.uniform_value();
    if (u == 0 && !rule[0]) return {Verdict::AllZeros, t};
    if (u == 1 && rule[kTableSize - 1]) return {Verdict::AllOnes, t};
    if (t == max_steps) return {Verdict::Undecided, max_steps};
    state = step(rule, state);
  }
}

}  // namespace majority
