#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majority/evaluation.hpp"
#include "majority/rng.hpp"
#include "majority/rule.hpp"
#include "majority/symmetry.hpp"

namespace majority {

/// The 128 one-bit mutants of `rule`, in bit-index order.
std::vector<Rule> neighbors(const Rule& rule);

/// Number of neighbors whose estimate is neutral to the rule's own estimate.
int neutral_degree(const Rule& rule, FitnessCache& cache);
int neutral_degree(const Rule& rule, std::uint64_t n, std::uint64_t seed,
                   const EvalParams& params = {});

struct WalkRecord {
  std::vector<Rule> rules;
  std::vector<FitnessEstimate> fitnesses;
  std::vector<int> degrees;  // empty unless degrees were measured
  std::vector<std::size_t> distances;

  std::size_t length() const { return rules.empty() ? 0 : rules.size() - 1; }
};

enum class NeutralityCheck {
  AllVisited,  // each new rule must be neutral to every rule already on the walk
  CurrentOnly,
};

struct WalkOptions {
  NeutralityCheck check = NeutralityCheck::AllVisited;
  bool record_degrees = false;
};

/**
 * Neutral walk that moves strictly away from `start`: each step flips a bit
 * not flipped before, trying candidates in random order and taking the first
 * neutral one. Stops when no candidate qualifies, so length <= 128.
 */
WalkRecord expanding_neutral_walk(const Rule& start, FitnessCache& cache, Rng& rng,
                                  const WalkOptions& options = {});
WalkRecord expanding_neutral_walk(const Rule& start, std::uint64_t n, std::uint64_t seed,
                                  const WalkOptions& options = {}, const EvalParams& params = {});

/**
 * Neutral random walk: each step moves to a uniformly chosen unvisited
 * neighbor that passes the neutrality check. The neutral degree of every
 * visited rule is always recorded. Stops early when stuck.
 */
WalkRecord random_neutral_walk(const Rule& start, std::size_t steps, FitnessCache& cache, Rng& rng,
                               const WalkOptions& options = {});
WalkRecord random_neutral_walk(const Rule& start, std::size_t steps, std::uint64_t n,
                               std::uint64_t seed, const WalkOptions& options = {},
                               const EvalParams& params = {});

/// r(k) for k = 0..max_lag. Throws std::invalid_argument when the series is
/// too short and std::domain_error when it has zero variance.
std::vector<double> autocorrelation(const std::vector<double>& series, std::size_t max_lag);
/// Unweighted mean of the per-series estimates. Constant series are skipped;
/// throws std::domain_error if nothing is left.
std::vector<double> mean_autocorrelation(const std::vector<std::vector<double>>& series,
                                         std::size_t max_lag);

inline constexpr std::size_t kDefaultBins = 115;

struct Histogram {
  std::vector<double> edges;  // bins + 1 edges over [0,1]
  std::vector<std::uint64_t> counts;
  std::vector<double> samples;  // fitness of each recorded sample, in order
  std::uint64_t total = 0;
  std::uint64_t zero_count = 0;
  std::string sampler;
  double temperature = 0.0;
  std::uint64_t burn_in = 0;
  std::uint64_t thinning = 0;
  double acceptance_rate = 0.0;
  std::optional<std::string> subspace;

  double zero_fraction() const { return total ? static_cast<double>(zero_count) / total : 0.0; }
  double max_value() const;
  /// Samples with lo <= value < hi.
  std::uint64_t count_between(double lo, double hi) const;
};

Histogram make_histogram(std::size_t bins);
void add_sample(Histogram& h, double value);

struct DosOptions {
  std::size_t bins = kDefaultBins;
  std::optional<OlympusTemplate> subspace;
  EvalParams params;
};

struct MetropolisParams {
  double temperature = 0.02;
  std::uint64_t burn_in = 1000;
  std::uint64_t thinning = 10;
};

/// Fitness histogram of rules drawn uniformly from the full space or from
/// the free positions of `options.subspace`.
Histogram dos_uniform(std::uint64_t samples, std::uint64_t n, std::uint64_t seed,
                      const DosOptions& options = {});

/// Random-walk Metropolis over one-bit flips (free positions only when a
/// subspace is given), Boltzmann acceptance exp((f(y) - f(x)) / T).
Histogram dos_metropolis(std::uint64_t samples, std::uint64_t n, const MetropolisParams& mh,
                         std::uint64_t seed, const DosOptions& options = {});

}  // namespace majority
