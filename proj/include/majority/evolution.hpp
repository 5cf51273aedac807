#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majority/evaluation.hpp"
#include "majority/rng.hpp"
#include "majority/symmetry.hpp"

namespace majority {

struct GAConfig {
  std::size_t population = 100;
  std::size_t generations = 1000;
  std::uint64_t n_gen = 100;
  std::uint64_t n_final = kStandardSampleSize;
  /// Per-free-bit flip probability; 2 / (number of free positions) when unset.
  std::optional<double> mutation;
  double crossover = 0.6;
  std::size_t elitism = 1;
  OlympusTemplate tmpl;
  std::uint64_t seed = 0;
  EvalParams params;

  double mutation_rate() const;
  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct Individual {
  Genotype genotype;
  FitnessEstimate fitness;
};

/// Binary tournament aware of evaluation noise: a neutral pair is decided by
/// a fair coin, otherwise the fitter individual wins.
const Individual& tournament_select(const Individual& a, const Individual& b, Rng& rng);

struct GenerationStats {
  double best = 0.0;
  double mean = 0.0;
  Rule best_rule;
};

struct GAResult {
  GAConfig config;
  Rule best_rule;
  /// Best-of-run rule re-measured on an n_final sample independent of the one
  /// used to pick it.
  FitnessEstimate best_final;
  std::vector<GenerationStats> trace;
  /// Running maximum of the per-generation best rules scored at n_final.
  std::vector<double> best_so_far;
  std::vector<Rule> initial_population;
  std::vector<Rule> final_population;
};

GAResult run_ga(const GAConfig& config);

}  // namespace majority
