#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "majority/ca.hpp"

namespace majority {

namespace {

constexpr int kWords = 4;
constexpr int kLanes = 64 * kWords;

struct Lanes {
  std::array<std::uint64_t, kWords> w{};

  static Lanes filled(std::uint64_t v) {
    Lanes r;
    r.w.fill(v);
    return r;
  }
  friend Lanes operator&(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int k = 0; k < kWords; ++k) r.w[k] = a.w[k] & b.w[k];
    return r;
  }
  friend Lanes operator|(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int k = 0; k < kWords; ++k) r.w[k] = a.w[k] | b.w[k];
    return r;
  }
  friend Lanes operator^(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int k = 0; k < kWords; ++k) r.w[k] = a.w[k] ^ b.w[k];
    return r;
  }
  friend Lanes operator~(const Lanes& a) {
    Lanes r;
    for (int k = 0; k < kWords; ++k) r.w[k] = ~a.w[k];
    return r;
  }
  friend bool operator==(const Lanes&, const Lanes&) = default;
  bool test(int lane) const { return (w[lane / 64] >> (lane % 64)) & 1; }
  void set(int lane) { w[lane / 64] |= std::uint64_t{1} << (lane % 64); }
};

// select ? b : a
inline Lanes mux(const Lanes& select, const Lanes& a, const Lanes& b) {
  return a ^ ((a ^ b) & select);
}

/// Rule compiled for lane evaluation: the table is split into 32 groups of
/// four codes sharing the upper five neighborhood bits; each group is one of
/// the 16 boolean functions of the two lowest bits (s[i+2], s[i+3]).
struct CompiledRule {
  std::array<std::uint8_t, 32> group_function{};
  bool zeros_fixed = false;
  bool ones_fixed = false;

  explicit CompiledRule(const Rule& rule)
      : zeros_fixed(!rule[0]), ones_fixed(rule[kTableSize - 1]) {
    for (unsigned m = 0; m < 32; ++m) {
      unsigned f = 0;
      for (unsigned j = 0; j < 4; ++j) f |= static_cast<unsigned>(rule[4 * m + j]) << j;
      group_function[m] = static_cast<std::uint8_t>(f);
    }
  }

  // `in` points at the seven lane words s[i-3] .. s[i+3].
  Lanes apply(const Lanes* in) const {
    const Lanes& x1 = in[5];
    const Lanes& x0 = in[6];
    std::array<Lanes, 16> fn;
    fn[0] = Lanes{};
    fn[1] = ~(x1 | x0);
    fn[2] = x0 & ~x1;
    fn[4] = x1 & ~x0;
    fn[8] = x1 & x0;
    for (unsigned t = 3; t < 16; ++t) {
      if (std::has_single_bit(t)) continue;
      const unsigned low = t & (~t + 1);
      fn[t] = fn[t & ~low] | fn[low];
    }

    std::array<Lanes, 16> level;
    const Lanes& x2 = in[4];
    for (int j = 0; j < 16; ++j) {
      level[j] = mux(x2, fn[group_function[2 * j]], fn[group_function[2 * j + 1]]);
    }
    // Remaining variables s[i-1] .. s[i-3], least significant first.
    int width = 16;
    for (int var = 3; var >= 0; --var) {
      width /= 2;
      for (int j = 0; j < width; ++j) level[j] = mux(in[var], level[2 * j], level[2 * j + 1]);
    }
    return level[0];
  }
};

// Exceptions must not escape an OpenMP region, so inputs are checked up front.
void check_inputs(std::span<const Configuration> ics, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  for (const auto& ic : ics) {
    if (ic.size() != ics.front().size()) throw std::invalid_argument("all ICs in a batch must share a lattice size");
  }
}

/// Simulates up to kLanes ICs of equal length together and writes their outcomes.
void classify_block(const CompiledRule& rule, std::span<const Configuration> ics, int max_steps,
                    std::span<Outcome> out) {
  const int count = static_cast<int>(ics.size());
  const int n = ics.front().size();

  if (!rule.zeros_fixed && !rule.ones_fixed) {
    for (int l = 0; l < count; ++l) out[static_cast<std::size_t>(l)] = {Verdict::Undecided, max_steps};
    return;
  }

  // Cells live at [kRadius, kRadius + n) with periodic halos on each side.
  std::vector<Lanes> cur(static_cast<std::size_t>(n + 2 * kRadius));
  std::vector<Lanes> next(cur.size());
  std::vector<Lanes> prev(cur.size());
  for (int l = 0; l < count; ++l) {
    const auto cells = ics[static_cast<std::size_t>(l)].cells();
    for (int i = 0; i < n; ++i) {
      if (cells[static_cast<std::size_t>(i)]) cur[static_cast<std::size_t>(kRadius + i)].set(l);
    }
  }
  auto fill_halo = [n](std::vector<Lanes>& buf) {
    for (int h = 0; h < kRadius; ++h) {
      buf[static_cast<std::size_t>(h)] = buf[static_cast<std::size_t>(n + h)];
      buf[static_cast<std::size_t>(kRadius + n + h)] = buf[static_cast<std::size_t>(kRadius + h)];
    }
  };
  fill_halo(cur);

  Lanes active;
  for (int l = 0; l < count; ++l) active.set(l);
  Lanes decided;
  // Undecided lanes caught in a cycle of period 1 or 2; they can never reach
  // a uniform fixed point.
  Lanes cycling;
  Lanes any_one;
  Lanes all_one = Lanes::filled(~std::uint64_t{0});
  for (int i = 0; i < n; ++i) {
    any_one = any_one | cur[static_cast<std::size_t>(kRadius + i)];
    all_one = all_one & cur[static_cast<std::size_t>(kRadius + i)];
  }

  Lanes moved1;  // lanes whose state differs from one step back
  Lanes moved2 = Lanes::filled(~std::uint64_t{0});  // ... from two steps back
  for (int t = 0;; ++t) {
    const Lanes at_zero = rule.zeros_fixed ? ~any_one : Lanes{};
    const Lanes at_one = rule.ones_fixed ? all_one : Lanes{};
    const Lanes fresh = (at_zero | at_one) & active & ~decided;
    if (!(fresh == Lanes{})) {
      for (int l = 0; l < count; ++l) {
        if (fresh.test(l)) {
          out[static_cast<std::size_t>(l)] = {at_zero.test(l) ? Verdict::AllZeros : Verdict::AllOnes, t};
        }
      }
      decided = decided | fresh;
    }
    if (t > 0) cycling = cycling | ((~moved1 | ~moved2) & active & ~decided);
    if ((decided | cycling) == active) break;
    if (t == max_steps) break;

    any_one = Lanes{};
    all_one = Lanes::filled(~std::uint64_t{0});
    Lanes diff1;
    Lanes diff2;
    for (int i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(kRadius + i);
      const Lanes v = rule.apply(&cur[static_cast<std::size_t>(i)]);
      next[c] = v;
      any_one = any_one | v;
      all_one = all_one & v;
      diff1 = diff1 | (v ^ cur[c]);
      diff2 = diff2 | (v ^ prev[c]);
    }
    moved1 = diff1;
    moved2 = t == 0 ? Lanes::filled(~std::uint64_t{0}) : diff2;
    fill_halo(next);
    // prev <- cur <- next
    prev.swap(cur);
    cur.swap(next);
  }

  for (int l = 0; l < count; ++l) {
    if (!decided.test(l)) out[static_cast<std::size_t>(l)] = {Verdict::Undecided, max_steps};
  }
}

}  // namespace

std::vector<Outcome> classify_batch(const Rule& rule, std::span<const Configuration> ics,
                                    int max_steps) {
  check_inputs(ics, max_steps);
  std::vector<Outcome> out(ics.size());
  if (ics.empty()) return out;
  const CompiledRule compiled(rule);
  const auto blocks = static_cast<std::int64_t>((ics.size() + kLanes - 1) / kLanes);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t first = static_cast<std::size_t>(b) * kLanes;
    const std::size_t len = std::min<std::size_t>(kLanes, ics.size() - first);
    classify_block(compiled, ics.subspan(first, len), max_steps,
                   std::span<Outcome>(out).subspan(first, len));
  }
  return out;
}

std::size_t count_correct(const Rule& rule, std::span<const Configuration> ics, int max_steps) {
  check_inputs(ics, max_steps);
  if (ics.empty()) return 0;
  const CompiledRule compiled(rule);
  const auto blocks = static_cast<std::int64_t>((ics.size() + kLanes - 1) / kLanes);
  std::size_t total = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t first = static_cast<std::size_t>(b) * kLanes;
    const std::size_t len = std::min<std::size_t>(kLanes, ics.size() - first);
    std::array<Outcome, kLanes> local;
    const auto slice = ics.subspan(first, len);
    classify_block(compiled, slice, max_steps, std::span<Outcome>(local).first(len));
    for (std::size_t l = 0; l < len; ++l) total += is_correct(local[l], slice[l]) ? 1 : 0;
  }
  return total;
}

}  // namespace majority
