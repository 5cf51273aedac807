#include "majority/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace majority {

std::vector<Rule> neighbors(const Rule& rule) {
  std::vector<Rule> out;
  out.reserve(kTableSize);
  for (std::size_t k = 0; k < kTableSize; ++k) out.push_back(rule.flipped(k));
  return out;
}

int neutral_degree(const Rule& rule, FitnessCache& cache) {
  const FitnessEstimate self = cache.evaluate(rule);
  const auto nb = neighbors(rule);
  const auto fits = cache.evaluate_all(nb);
  return static_cast<int>(std::count_if(fits.begin(), fits.end(),
                                        [&](const FitnessEstimate& f) { return is_neutral(self, f); }));
}

int neutral_degree(const Rule& rule, std::uint64_t n, std::uint64_t seed, const EvalParams& params) {
  FitnessCache cache(n, seed, params);
  return neutral_degree(rule, cache);
}

namespace {

bool admissible(const FitnessEstimate& candidate, const WalkRecord& walk, NeutralityCheck check) {
  if (check == NeutralityCheck::CurrentOnly) return is_neutral(candidate, walk.fitnesses.back());
  return std::all_of(walk.fitnesses.begin(), walk.fitnesses.end(),
                     [&](const FitnessEstimate& f) { return is_neutral(candidate, f); });
}

void push(WalkRecord& walk, const Rule& start, const Rule& rule, const FitnessEstimate& f) {
  walk.rules.push_back(rule);
  walk.fitnesses.push_back(f);
  walk.distances.push_back(hamming_distance(start, rule));
}

}  // namespace

WalkRecord expanding_neutral_walk(const Rule& start, FitnessCache& cache, Rng& rng,
                                  const WalkOptions& options) {
  WalkRecord walk;
  push(walk, start, start, cache.evaluate(start));
  std::vector<std::size_t> unflipped(kTableSize);
  std::iota(unflipped.begin(), unflipped.end(), std::size_t{0});

  while (!unflipped.empty()) {
    std::shuffle(unflipped.begin(), unflipped.end(), rng);
    bool moved = false;
    for (std::size_t j = 0; j < unflipped.size(); ++j) {
      const Rule candidate = walk.rules.back().flipped(unflipped[j]);
      const FitnessEstimate f = cache.evaluate(candidate);
      if (!admissible(f, walk, options.check)) continue;
      push(walk, start, candidate, f);
      unflipped.erase(unflipped.begin() + static_cast<std::ptrdiff_t>(j));
      moved = true;
      break;
    }
    if (!moved) break;
  }

  if (options.record_degrees) {
    for (const auto& r : walk.rules) walk.degrees.push_back(neutral_degree(r, cache));
  }
  return walk;
}

WalkRecord expanding_neutral_walk(const Rule& start, std::uint64_t n, std::uint64_t seed,
                                  const WalkOptions& options, const EvalParams& params) {
  FitnessCache cache(n, seed, params);
  Rng rng(derive_seed(seed, {1}));
  return expanding_neutral_walk(start, cache, rng, options);
}

WalkRecord random_neutral_walk(const Rule& start, std::size_t steps, FitnessCache& cache, Rng& rng,
                               const WalkOptions& options) {
  if (steps < 1) throw std::invalid_argument("a random neutral walk needs at least one step");
  WalkRecord walk;
  push(walk, start, start, cache.evaluate(start));
  std::unordered_set<Rule> visited{start};

  for (;;) {
    const Rule current = walk.rules.back();
    const auto nb = neighbors(current);
    const auto fits = cache.evaluate_all(nb);
    walk.degrees.push_back(static_cast<int>(
        std::count_if(fits.begin(), fits.end(),
                      [&](const FitnessEstimate& f) { return is_neutral(walk.fitnesses.back(), f); })));
    if (walk.length() == steps) break;

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (!visited.contains(nb[k]) && admissible(fits[k], walk, options.check)) candidates.push_back(k);
    }
    if (candidates.empty()) break;
    const std::size_t pick =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    push(walk, start, nb[pick], fits[pick]);
    visited.insert(nb[pick]);
  }
  return walk;
}

WalkRecord random_neutral_walk(const Rule& start, std::size_t steps, std::uint64_t n,
                               std::uint64_t seed, const WalkOptions& options,
                               const EvalParams& params) {
  FitnessCache cache(n, seed, params);
  Rng rng(derive_seed(seed, {1}));
  return random_neutral_walk(start, steps, cache, rng, options);
}

std::vector<double> autocorrelation(const std::vector<double>& series, std::size_t max_lag) {
  if (series.size() <= max_lag + 1) {
    throw std::invalid_argument("series of length " + std::to_string(series.size()) +
                                " is too short for lag " + std::to_string(max_lag));
  }
  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / series.size();
  double denom = 0.0;
  for (double x : series) denom += (x - mean) * (x - mean);
  if (denom <= 0.0) throw std::domain_error("autocorrelation is undefined for a constant series");

  std::vector<double> r(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t t = 0; t + k < series.size(); ++t) num += (series[t] - mean) * (series[t + k] - mean);
    r[k] = num / denom;
  }
  return r;
}

std::vector<double> mean_autocorrelation(const std::vector<std::vector<double>>& series,
                                         std::size_t max_lag) {
  if (series.empty()) throw std::invalid_argument("no series to average");
  std::vector<double> mean(max_lag + 1, 0.0);
  std::size_t used = 0;
  for (const auto& s : series) {
    if (s.size() > max_lag + 1 && std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end()) {
      continue;  // constant: carries no correlation information
    }
    const auto r = autocorrelation(s, max_lag);
    for (std::size_t k = 0; k <= max_lag; ++k) mean[k] += r[k];
    ++used;
  }
  if (used == 0) throw std::domain_error("autocorrelation is undefined: every series is constant");
  for (auto& v : mean) v /= static_cast<double>(used);
  return mean;
}

double Histogram::max_value() const {
  return samples.empty() ? 0.0 : *std::max_element(samples.begin(), samples.end());
}

std::uint64_t Histogram::count_between(double lo, double hi) const {
  return static_cast<std::uint64_t>(
      std::count_if(samples.begin(), samples.end(), [&](double v) { return v >= lo && v < hi; }));
}

Histogram make_histogram(std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  Histogram h;
  h.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = static_cast<double>(b) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  return h;
}

void add_sample(Histogram& h, double value) {
  const std::size_t bins = h.counts.size();
  const auto b = std::min(bins - 1, static_cast<std::size_t>(value * static_cast<double>(bins)));
  ++h.counts[b];
  ++h.total;
  if (value == 0.0) ++h.zero_count;
  h.samples.push_back(value);
}

namespace {

Rule draw_rule(const DosOptions& options, Rng& rng) {
  return sample_olympus(options.subspace ? *options.subspace : OlympusTemplate::full_space(), rng);
}

void describe_subspace(Histogram& h, const DosOptions& options) {
  if (options.subspace) h.subspace = options.subspace->format();
}

}  // namespace

Histogram dos_uniform(std::uint64_t samples, std::uint64_t n, std::uint64_t seed,
                      const DosOptions& options) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  Histogram h = make_histogram(options.bins);
  h.sampler = "uniform";
  describe_subspace(h, options);

  Rng rng(derive_seed(seed, {2}));
  std::vector<Rule> rules;
  rules.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) rules.push_back(draw_rule(options, rng));
  FitnessCache cache(n, seed, options.params);
  for (const auto& f : cache.evaluate_all(rules)) add_sample(h, f.value());
  return h;
}

Histogram dos_metropolis(std::uint64_t samples, std::uint64_t n, const MetropolisParams& mh,
                         std::uint64_t seed, const DosOptions& options) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (!(mh.temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
  if (mh.thinning == 0) throw std::invalid_argument("thinning must be >= 1");
  Histogram h = make_histogram(options.bins);
  h.sampler = "metropolis";
  h.temperature = mh.temperature;
  h.burn_in = mh.burn_in;
  h.thinning = mh.thinning;
  describe_subspace(h, options);

  const OlympusTemplate space = options.subspace ? *options.subspace : OlympusTemplate::full_space();
  const auto& positions = space.free_positions();
  if (positions.empty()) throw std::invalid_argument("subspace has no free positions");

  Rng rng(derive_seed(seed, {3}));
  std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FitnessCache cache(n, seed, options.params);

  Rule x = draw_rule(options, rng);
  double fx = cache.evaluate(x).value();
  std::uint64_t accepted = 0;
  const std::uint64_t iterations = mh.burn_in + samples * mh.thinning;
  for (std::uint64_t it = 1; it <= iterations; ++it) {
    const Rule y = x.flipped(positions[pick(rng)]);
    const double fy = cache.evaluate(y).value();
    const bool accept = fy >= fx || unit(rng) < std::exp((fy - fx) / mh.temperature);
    if (accept) {
      x = y;
      fx = fy;
      ++accepted;
    }
    if (it > mh.burn_in && (it - mh.burn_in) % mh.thinning == 0) add_sample(h, fx);
  }
  h.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(iterations);
  return h;
}

}  // namespace majority
