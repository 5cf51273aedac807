#include "majority/evolution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace majority {

namespace {

// Stream tags for derive_seed.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kEvalStream = 2;
constexpr std::uint64_t kBreedStream = 3;
constexpr std::uint64_t kRankStream = 4;
constexpr std::uint64_t kReportStream = 5;

Genotype breed(const std::vector<Individual>& pop, const GAConfig& cfg, Rng& rng) {
  std::uniform_int_distribution<std::size_t> any(0, pop.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto pick = [&]() -> const Individual& {
    const Individual& a = pop[any(rng)];
    const Individual& b = pop[any(rng)];
    return tournament_select(a, b, rng);
  };
  const Individual& mother = pick();
  const Individual& father = pick();
  Genotype child = mother.genotype;
  if (unit(rng) < cfg.crossover) {
    for (std::size_t j = 0; j < child.size(); ++j) {
      if (unit(rng) < 0.5) child[j] = father.genotype[j];
    }
  }
  const double pm = cfg.mutation_rate();
  if (pm > 0.0) {
    for (auto& bit : child) {
      if (unit(rng) < pm) bit ^= 1;
    }
  }
  return child;
}

}  // namespace

double GAConfig::mutation_rate() const {
  if (mutation) return *mutation;
  const auto free = tmpl.free_positions().size();
  return free ? 2.0 / static_cast<double>(free) : 0.0;
}

void GAConfig::validate() const {
  if (population < 2) throw std::invalid_argument("population must be >= 2");
  if (generations < 1) throw std::invalid_argument("generations must be >= 1");
  if (n_gen < 1 || n_final < 1) throw std::invalid_argument("sample sizes must be >= 1");
  const double pm = mutation_rate();
  if (pm < 0.0 || pm > 1.0) throw std::invalid_argument("mutation probability must lie in [0,1]");
  if (crossover < 0.0 || crossover > 1.0) throw std::invalid_argument("crossover probability must lie in [0,1]");
  if (elitism >= population) throw std::invalid_argument("elitism must be smaller than the population");
}

const Individual& tournament_select(const Individual& a, const Individual& b, Rng& rng) {
  if (is_neutral(a.fitness, b.fitness)) {
    return std::bernoulli_distribution(0.5)(rng) ? a : b;
  }
  return a.fitness.correct >= b.fitness.correct ? a : b;
}

GAResult run_ga(const GAConfig& cfg) {
  cfg.validate();
  GAResult result;
  result.config = cfg;

  std::vector<Individual> pop(cfg.population);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    Rng rng(derive_seed(cfg.seed, {kInitStream, i}));
    pop[i].genotype = project(sample_olympus(cfg.tmpl, rng), cfg.tmpl);
    result.initial_population.push_back(embed(pop[i].genotype, cfg.tmpl));
  }

  std::vector<std::size_t> order(pop.size());
  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    // Fresh IC sample per generation, shared by the whole population.
    FitnessCache cache(cfg.n_gen, derive_seed(cfg.seed, {kEvalStream, gen}), cfg.params);
    std::vector<Rule> rules;
    rules.reserve(pop.size());
    for (const auto& ind : pop) rules.push_back(embed(ind.genotype, cfg.tmpl));
    const auto fits = cache.evaluate_all(rules);
    for (std::size_t i = 0; i < pop.size(); ++i) pop[i].fitness = fits[i];

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pop[a].fitness.correct > pop[b].fitness.correct;
    });
    GenerationStats stats;
    stats.best = pop[order.front()].fitness.value();
    stats.best_rule = rules[order.front()];
    for (const auto& ind : pop) stats.mean += ind.fitness.value();
    stats.mean /= static_cast<double>(pop.size());
    result.trace.push_back(stats);

    std::vector<Individual> next(pop.size());
    for (std::size_t e = 0; e < cfg.elitism; ++e) next[e] = pop[order[e]];
    const auto count = static_cast<std::int64_t>(pop.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t c = static_cast<std::int64_t>(cfg.elitism); c < count; ++c) {
      Rng rng(derive_seed(cfg.seed, {kBreedStream, gen, static_cast<std::uint64_t>(c)}));
      next[static_cast<std::size_t>(c)].genotype = breed(pop, cfg, rng);
    }
    pop = std::move(next);
  }
  for (const auto& ind : pop) result.final_population.push_back(embed(ind.genotype, cfg.tmpl));

  // Rank the distinct per-generation champions on a large sample, then
  // report the winner on an independent one.
  FitnessCache ranking(cfg.n_final, derive_seed(cfg.seed, {kRankStream}), cfg.params);
  std::vector<Rule> champions;
  for (const auto& s : result.trace) champions.push_back(s.best_rule);
  const auto scores = ranking.evaluate_all(champions);
  double running = -1.0;
  std::size_t winner = 0;
  for (std::size_t g = 0; g < scores.size(); ++g) {
    if (scores[g].value() > running) {
      running = scores[g].value();
      winner = g;
    }
    result.best_so_far.push_back(running);
  }
  result.best_rule = champions[winner];
  result.best_final =
      standard_performance(result.best_rule, cfg.n_final, derive_seed(cfg.seed, {kReportStream}), cfg.params);
  return result;
}

}  // namespace majority
