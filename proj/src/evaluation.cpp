#include "majority/evaluation.hpp"

#include <cmath>
#include <stdexcept>

#include "majority/rng.hpp"

namespace majority {

FitnessEstimate FitnessEstimate::from_value(double value, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be >= 1");
  if (!(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("fitness must lie in [0,1]");
  return {static_cast<std::uint64_t>(std::llround(value * static_cast<double>(n))), n, seed};
}

Configuration sample_ic(const ICSampler& sampler, std::uint64_t index) {
  if (sampler.lattice < 1 || sampler.lattice % 2 == 0) {
    throw std::invalid_argument("lattice size must be odd and positive");
  }
  const std::uint64_t stream = derive_seed(sampler.seed, {index});
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(sampler.lattice));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i % 64 == 0) bits = mix64(stream + i / 64);
    cells[i] = static_cast<std::uint8_t>((bits >> (i % 64)) & 1);
  }
  return Configuration(std::move(cells));
}

std::vector<Configuration> sample_ics(const ICSampler& sampler, std::uint64_t n) {
  std::vector<Configuration> ics;
  ics.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) ics.push_back(sample_ic(sampler, i));
  return ics;
}

FitnessEstimate standard_performance(const Rule& rule, std::uint64_t n, std::uint64_t seed,
                                     const EvalParams& params) {
  if (n == 0) throw std::invalid_argument("sample size must be >= 1");
  const auto ics = sample_ics({seed, params.lattice}, n);
  return {count_correct(rule, ics, params.max_steps), n, seed};
}

FitnessEstimate standard_performance_reference(const Rule& rule, std::uint64_t n,
                                               std::uint64_t seed, const EvalParams& params) {
  if (n == 0) throw std::invalid_argument("sample size must be >= 1");
  const ICSampler sampler{seed, params.lattice};
  std::uint64_t correct = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto ic = sample_ic(sampler, i);
    correct += is_correct(evolve(rule, ic, params.max_steps), ic) ? 1 : 0;
  }
  return {correct, n, seed};
}

bool is_neutral(const FitnessEstimate& a, const FitnessEstimate& b, double z) {
  const double diff = std::abs(a.value() - b.value());
  const double spread = std::sqrt(a.variance() / static_cast<double>(a.n) +
                                  b.variance() / static_cast<double>(b.n));
  return diff <= z * spread;
}

Levels distinguishable_levels(std::uint64_t n, double z) {
  if (n == 0) throw std::invalid_argument("sample size must be >= 1");
  // Next level x > f solves (x - f)^2 = a (f(1-f) + x(1-x)) with a = z^2/n;
  // take the larger root of (1+a)x^2 - (2f+a)x + f^2 - a f(1-f) = 0.
  const double a = z * z / static_cast<double>(n);
  Levels levels;
  double f = 0.0;
  levels.values.push_back(f);
  for (;;) {
    const double qa = 1.0 + a;
    const double qb = -(2.0 * f + a);
    const double qc = f * f - a * f * (1.0 - f);
    const double x = (-qb + std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);
    if (x > 1.0) break;
    levels.values.push_back(x);
    f = x;
  }
  levels.count = levels.values.size();
  return levels;
}

FitnessCache::FitnessCache(std::uint64_t n, std::uint64_t seed, const EvalParams& params)
    : n_(n), seed_(seed), params_(params) {
  if (n == 0) throw std::invalid_argument("sample size must be >= 1");
  ics_ = sample_ics({seed, params.lattice}, n);
}

FitnessEstimate FitnessCache::compute(const Rule& rule) const {
  return {count_correct(rule, ics_, params_.max_steps), n_, seed_};
}

FitnessEstimate FitnessCache::evaluate(const Rule& rule) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(rule); it != cache_.end()) return it->second;
  }
  const FitnessEstimate f = compute(rule);
  std::lock_guard lock(mutex_);
  cache_.emplace(rule, f);
  return f;
}

std::vector<FitnessEstimate> FitnessCache::evaluate_all(std::span<const Rule> rules) {
  std::vector<FitnessEstimate> out(rules.size());
  const auto count = static_cast<std::int64_t>(rules.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = evaluate(rules[static_cast<std::size_t>(i)]);
  return out;
}

std::size_t FitnessCache::evaluations() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

}  // namespace majority
