#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "majority/ca.hpp"
#include "majority/configuration.hpp"
#include "majority/rule.hpp"

namespace majority {

/// Two-sided 95% normal quantile used by the neutrality test.
inline constexpr double kNeutralityZ = 1.96;
inline constexpr std::uint64_t kStandardSampleSize = 10'000;

/// Measured standard performance: `correct` of `n` ICs drawn with `seed`.
struct FitnessEstimate {
  std::uint64_t correct = 0;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;

  double value() const { return static_cast<double>(correct) / static_cast<double>(n); }
  /// Bernoulli variance f(1-f) of a single classification.
  double variance() const { return value() * (1.0 - value()); }

  /// Nearest representable estimate for a given fraction.
  static FitnessEstimate from_value(double value, std::uint64_t n, std::uint64_t seed = 0);

  friend bool operator==(const FitnessEstimate&, const FitnessEstimate&) = default;
};

/// Binomial IC source. IC `index` depends only on (seed, index, lattice), so
/// any partition of the index range reproduces the same sample.
struct ICSampler {
  std::uint64_t seed = 0;
  int lattice = kDefaultLattice;
};

Configuration sample_ic(const ICSampler& sampler, std::uint64_t index);
std::vector<Configuration> sample_ics(const ICSampler& sampler, std::uint64_t n);

struct EvalParams {
  int lattice = kDefaultLattice;
  int max_steps = kDefaultMaxSteps;
};

FitnessEstimate standard_performance(const Rule& rule, std::uint64_t n, std::uint64_t seed,
                                     const EvalParams& params = {});

/// Same measurement through the serial reference simulator.
FitnessEstimate standard_performance_reference(const Rule& rule, std::uint64_t n,
                                               std::uint64_t seed, const EvalParams& params = {});

/// |fa - fb| <= z * sqrt(fa(1-fa)/na + fb(1-fb)/nb)
bool is_neutral(const FitnessEstimate& a, const FitnessEstimate& b, double z = kNeutralityZ);

struct Levels {
  std::size_t count = 0;
  std::vector<double> values;
};

/// Greedy chain 0 = f0 < f1 < ... in [0,1] where each f(k+1) is the first
/// value the neutrality test separates from f(k) at sample size n.
Levels distinguishable_levels(std::uint64_t n, double z = kNeutralityZ);

/**
 * Memoized evaluator for one IC sample (n, seed). Every rule is scored against
 * the same ICs, which are generated once. Thread-safe; `evaluate_all` spreads
 * uncached rules over OpenMP threads.
 */
class FitnessCache {
 public:
  FitnessCache(std::uint64_t n, std::uint64_t seed, const EvalParams& params = {});

  FitnessEstimate evaluate(const Rule& rule);
  std::vector<FitnessEstimate> evaluate_all(std::span<const Rule> rules);

  std::uint64_t sample_size() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t evaluations() const;

 private:
  FitnessEstimate compute(const Rule& rule) const;

  std::uint64_t n_;
  std::uint64_t seed_;
  EvalParams params_;
  std::vector<Configuration> ics_;
  mutable std::mutex mutex_;
  std::unordered_map<Rule, FitnessEstimate> cache_;
};

}  // namespace majority
