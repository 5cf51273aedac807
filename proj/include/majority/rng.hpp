#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace majority {

/// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Deterministic child seed for a (seed, k0, k1, ...) path. Used to give
/// every generation/individual/walk its own stream independent of scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(seed);
  for (auto k : path) h = mix64(h ^ mix64(k + 0x632BE59BD9B4E019ull));
  return h;
}

using Rng = std::mt19937_64;

}  // namespace majority
